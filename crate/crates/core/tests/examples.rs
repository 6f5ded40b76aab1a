//! Worked values, frozen. Hand-derived ones were confirmed by an
//! independent script before being pinned.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use rasc::bijection::{add, complement, eta, eta_inverse, phi, rom, standardize};
use rasc::gentree::{
    children_123, count_by_labels, expand_tree, g_statistic, generic_children, Label, Rule,
};
use rasc::oracle::{
    closed_form, expand_gf, fishburn, recurrence_213, stirling2, system_132, GfName,
};
use rasc::pattern::{
    check_lemma_main, count_avoiders, count_occurrences, structural_form_check, wilf_classes, Form,
    Pattern,
};
use rasc::seqcore::{
    ascbot_set, asctop_set, enumerate_family, is_ascent_sequence, is_cayley, is_member, nub,
    stat_sets, FamilyTag,
};
use rasc::{avoids, w, Error, Word};

fn set(v: &[usize]) -> BTreeSet<usize> {
    v.iter().copied().collect()
}

fn pat(s: &str) -> Pattern {
    Pattern::parse(s).unwrap()
}

fn words(v: &[Word]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn nums(v: &[BigUint]) -> Vec<u64> {
    v.iter().map(|x| u64::try_from(x).unwrap()).collect()
}

fn lab(a: u32, b: u32) -> Label {
    Label::new(a, b)
}

#[test]
fn statistic_sets() {
    assert_eq!(asctop_set(&w("135144312")), set(&[1, 2, 3, 5, 9]));
    let one = stat_sets(&w("1"));
    for s in [one.asctop, one.ascbot, one.destop, one.desbot] {
        assert_eq!(s, set(&[1]));
    }
    assert_eq!(ascbot_set(&w("12213245")), set(&[1, 4, 6, 7]));
    assert_eq!(nub(&w("135144312")), set(&[1, 2, 3, 5, 9]));
    assert_eq!(nub(&w("1111")), set(&[1]));
    assert_eq!(nub(&w("212")), set(&[1, 2]));
}

#[test]
fn membership() {
    assert!(is_cayley(&w("135144312")));
    assert!(is_cayley(&w("1")));
    assert!(!is_cayley(&w("113")));
    assert!(is_ascent_sequence(&w("12213245")));
    assert!(!is_ascent_sequence(&w("112142")));
    assert!(is_ascent_sequence(&w("1")));
    assert!(is_member(&w("135144312"), FamilyTag::ModifiedA));
    assert!(is_member(&w("11"), FamilyTag::RevisedB));
    assert!(is_member(&w("212"), FamilyTag::RevisedB));
}

#[test]
fn enumeration() {
    assert_eq!(
        words(&enumerate_family(2, FamilyTag::RevisedB).unwrap()),
        ["11"]
    );
    assert_eq!(
        words(&enumerate_family(1, FamilyTag::RevisedB).unwrap()),
        ["1"]
    );
    assert_eq!(enumerate_family(5, FamilyTag::RevisedB).unwrap().len(), 15);
    assert_eq!(
        words(&enumerate_family(3, FamilyTag::RevisedB).unwrap()),
        ["111", "212"]
    );
    assert!(matches!(
        enumerate_family(15, FamilyTag::RevisedB),
        Err(Error::CapExceeded { n: 15, cap: 14 })
    ));
    assert!(matches!(
        enumerate_family(0, FamilyTag::RevisedB),
        Err(Error::Usage(_))
    ));
}

#[test]
fn eta_values() {
    let t = eta(&w("12132124")).unwrap();
    assert_eq!(t.tilde, w("45354124"));
    assert_eq!(t.output, w("545354124"));
    assert_eq!(eta(&w("1")).unwrap().output, w("11"));
    let t = eta(&w("12")).unwrap();
    assert_eq!((t.tilde, t.output), (w("12"), w("212")));
    assert!(matches!(eta(&w("13")), Err(Error::Domain(_))));

    assert_eq!(eta_inverse(&w("545354124")).unwrap(), w("12132124"));
    assert_eq!(eta_inverse(&w("11")).unwrap(), w("1"));
    assert_eq!(eta_inverse(&w("212")).unwrap(), w("12"));
    assert!(matches!(eta_inverse(&w("12")), Err(Error::Domain(_))));
}

#[test]
fn add_rom_values() {
    assert_eq!(add(&w("11"), 2).unwrap(), w("212"));
    assert_eq!(add(&w("212"), 3).unwrap(), w("3123"));
    assert!(is_member(&w("3123"), FamilyTag::RevisedB));
    assert!(matches!(add(&w("11"), 3), Err(Error::Domain(_))));
    assert_eq!(rom(&w("212")).unwrap(), w("11"));
    assert_eq!(rom(&w("111")).unwrap(), w("11"));
    assert_eq!(rom(&w("3123")).unwrap(), w("212"));
    assert!(matches!(rom(&w("1")), Err(Error::Domain(_))));
}

#[test]
fn complement_standardize_phi() {
    assert_eq!(complement(&w("135144312")), w("531522354"));
    assert_eq!(complement(&w("1")), w("1"));
    assert_eq!(complement(&w("212")), w("121"));
    assert_eq!(standardize(&w("7424326")), w("5313214"));
    assert_eq!(standardize(&w("123")), w("123"));
    assert_eq!(standardize(&w("553")), w("221"));
    assert_eq!(phi(&w("6463612656")).unwrap(), w("151412316"));
    assert_eq!(phi(&w("11")).unwrap(), w("1"));
    assert_eq!(phi(&w("212")).unwrap(), w("12"));
    assert!(matches!(phi(&w("2121")), Err(Error::Domain(_))));
}

#[test]
fn occurrences() {
    assert_eq!(count_occurrences(&w("4134232"), &pat("123")), 2);
    assert_eq!(count_occurrences(&w("4134232"), &pat("112")), 0);
    assert_eq!(count_occurrences(&w("111"), &pat("11")), 3);
    assert!(avoids(&w("4134232"), &pat("112")));
    assert!(!avoids(&w("3"), &pat("1")));
    assert!(avoids(&w("1234"), &pat("21")));
}

#[test]
fn avoider_counts() {
    assert_eq!(
        count_avoiders(5, &pat("11"), FamilyTag::RevisedB).unwrap(),
        0
    );
    assert_eq!(
        count_avoiders(5, &pat("213"), FamilyTag::RevisedB).unwrap(),
        14
    );
    assert_eq!(
        count_avoiders(6, &pat("213"), FamilyTag::RevisedB).unwrap(),
        42
    );
    assert_eq!(
        count_avoiders(6, &pat("111"), FamilyTag::RevisedB).unwrap(),
        10
    );
}

#[test]
fn wilf_examples() {
    let one = wilf_classes(1, 5).unwrap();
    assert_eq!(one.classes.len(), 1);
    assert_eq!(one.classes[0].counts, [0; 5]);
    let two = wilf_classes(2, 6).unwrap();
    assert_eq!(two.class_of(&pat("11")).unwrap().counts, [1, 0, 0, 0, 0, 0]);
    assert_eq!(two.class_of(&pat("12")).unwrap().counts, [1; 6]);
    assert_eq!(
        two.class_of(&pat("21")).unwrap().patterns,
        [pat("12"), pat("21")]
    );
    let three = wilf_classes(3, 8).unwrap();
    assert_eq!(three.classes.len(), 10);
    for (a, b) in [("312", "122"), ("231", "321"), ("121", "211")] {
        assert_eq!(three.class_of(&pat(a)), three.class_of(&pat(b)));
    }
}

#[test]
fn prepended_maximum_examples() {
    for s in ["132", "12", "121"] {
        assert!(check_lemma_main(&pat(s), 8).unwrap());
    }
    assert!(matches!(
        check_lemma_main(&pat("123"), 4),
        Err(Error::Domain(_))
    ));
}

#[test]
fn form_examples() {
    assert!(structural_form_check(&w("312333"), Form::F221));
    for form in Form::ALL {
        assert!(structural_form_check(&w("11111"), form));
    }
    assert!(structural_form_check(&w("212"), Form::F312));
}

#[test]
fn tree_examples() {
    assert_eq!(generic_children(lab(1, 1)), [lab(1, 1), lab(2, 2)]);
    assert_eq!(
        generic_children(lab(2, 2)),
        [lab(2, 1), lab(2, 2), lab(3, 3)]
    );
    assert_eq!(
        generic_children(lab(2, 1)),
        [lab(2, 1), lab(3, 2), lab(3, 3)]
    );
    assert_eq!(children_123(lab(1, 1)).unwrap(), [lab(1, 1), lab(2, 2)]);
    assert_eq!(children_123(lab(2, 2)).unwrap(), [lab(2, 1), lab(2, 2)]);
    assert_eq!(
        children_123(lab(2, 1)).unwrap(),
        [lab(2, 1), lab(2, 2), lab(3, 3)]
    );
    assert!(matches!(children_123(lab(3, 2)), Err(Error::Domain(_))));

    let totals = |rule, k| -> Vec<u64> {
        count_by_labels(rule, k)
            .unwrap()
            .iter()
            .map(|l| u64::try_from(l.total()).unwrap())
            .collect()
    };
    assert_eq!(totals(Rule::Generic, 6), [1, 2, 5, 15, 53, 217]);
    assert_eq!(totals(Rule::Tree123, 5), [1, 2, 4, 9, 22]);
    let root = &count_by_labels(Rule::Generic, 1).unwrap()[0];
    assert_eq!(root.to_string(), "1 1,1:1");

    assert_eq!(
        words(&expand_tree(Rule::Generic, 3).unwrap()),
        ["111", "212"]
    );
    assert_eq!(
        words(&expand_tree(Rule::Tree123, 3).unwrap()),
        ["111", "212"]
    );
    assert_eq!(expand_tree(Rule::Generic, 4).unwrap().len(), 5);

    assert_eq!(g_statistic(&w("5453423133")).unwrap(), 3);
    assert_eq!(g_statistic(&w("1111")).unwrap(), 1);
    assert_eq!(g_statistic(&w("212")).unwrap(), 2);
}

#[test]
fn oracle_examples() {
    assert_eq!(nums(&fishburn(7)), [1, 2, 5, 15, 53, 217, 1014]);
    assert_eq!(nums(&fishburn(9))[7..], [5335, 31240]);
    assert_eq!(closed_form(&pat("321"), 6), Some(BigUint::from(27u32)));
    assert_eq!(closed_form(&pat("221"), 2), Some(BigUint::from(1u32)));
    assert_eq!(closed_form(&pat("112"), 5), Some(BigUint::from(15u32)));
    assert_eq!(closed_form(&pat("111"), 5), None);
    assert_eq!(stirling2(4, 2), BigUint::from(7u32));
    assert_eq!(stirling2(4, 3), BigUint::from(6u32));
    let f = nums(&recurrence_213(6));
    assert_eq!((f[0], f[2], f[5]), (1, 2, 42));
    let st = system_132(6);
    assert_eq!(nums(&st.g[1..]), [1, 1, 2, 5, 13, 35]);
    assert_eq!(nums(&st.s[..3]), [0, 0, 0]);
    assert_eq!(nums(&st.r[1..6]), [1, 1, 2, 4, 8]);
    assert_eq!(
        nums(&expand_gf(GfName::B123, 10).unwrap()),
        [1, 1, 2, 4, 9, 22, 57, 154, 429, 1223]
    );
    assert_eq!(
        nums(&expand_gf(GfName::B132, 10).unwrap()),
        [1, 1, 2, 5, 13, 35, 97, 275, 794, 2327]
    );
    assert_eq!(nums(&expand_gf(GfName::B213, 4).unwrap())[3], 5);
}
