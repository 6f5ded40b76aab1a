//! Property suites: exhaustive checks of the library's invariants up to a
//! length bound, reporting a counterexample for each failure.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::bijection::{add, complement, eta, eta_inverse, phi, relabel_by_ascent_bottoms, rom};
use crate::error::{Error, Result};
use crate::gentree::{
    children_123, count_by_labels, generic_children, generic_label, label_123, Label, Rule,
};
use crate::oracle::{
    self, bell, closed_form, data, expand_gf, fishburn, fishburn_number, gf_series, recurrence_213,
    stirling2, system_132, GfName, PowerSeries,
};
use crate::pattern::{
    all_patterns, avoiders, avoids, check_lemma_main, count_avoiders, structural_form_check,
    wilf_classes, Form, Pattern,
};
use crate::seqcore::{
    ascbot_set, asctop, asctop_set, desbot_set, destop_set, enumerate_revised_by_add, nub,
    Enumeration, FamilyTag,
};
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Seqcore,
    Eta,
    Addrom,
    Gentree,
    Table1,
    Phi,
    Series,
    Forms,
    Wilf,
    All,
}

impl Suite {
    /// Every concrete suite, in the order `All` runs them.
    pub const EACH: [Suite; 9] = [
        Suite::Seqcore,
        Suite::Eta,
        Suite::Addrom,
        Suite::Gentree,
        Suite::Table1,
        Suite::Phi,
        Suite::Series,
        Suite::Forms,
        Suite::Wilf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Seqcore => "seqcore",
            Suite::Eta => "eta",
            Suite::Addrom => "addrom",
            Suite::Gentree => "gentree",
            Suite::Table1 => "table1",
            Suite::Phi => "phi",
            Suite::Series => "series",
            Suite::Forms => "forms",
            Suite::Wilf => "wilf",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::usage(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyResult {
    pub suite: Suite,
    pub property: String,
    pub pass: bool,
    /// The first offending input, or the error that interrupted the check.
    pub counterexample: Option<String>,
}

impl fmt::Display for PropertyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{status} {} {}", self.suite, self.property)?;
        if let Some(ce) = &self.counterexample {
            write!(f, " counterexample={ce}")?;
        }
        Ok(())
    }
}

struct Fail(String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(e.to_string())
    }
}

type Outcome = std::result::Result<(), Fail>;

fn ensure(cond: bool, counterexample: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(Fail(counterexample()))
    }
}

struct Recorder {
    suite: Suite,
    out: Vec<PropertyResult>,
}

impl Recorder {
    fn check(&mut self, property: impl Into<String>, f: impl FnOnce() -> Outcome) {
        let res = f();
        self.out.push(PropertyResult {
            suite: self.suite,
            property: property.into(),
            pass: res.is_ok(),
            counterexample: res.err().map(|Fail(s)| s),
        });
    }
}

/// Runs one suite (or all of them) over lengths up to `n_max`.
///
/// A few checks have their own fixed ranges: series identities run to order
/// 30, tree label DPs to level 25, pattern containment monotonicity over
/// words of length at most `min(n_max, 7)`, and the Wilf scan uses at least
/// length 6 so that the length-3 classes separate.
pub fn run_suite(suite: Suite, n_max: usize) -> Result<Vec<PropertyResult>> {
    if n_max == 0 {
        return Err(Error::usage("n_max must be at least 1"));
    }
    if suite == Suite::All {
        let mut out = Vec::new();
        for s in Suite::EACH {
            out.extend(run_suite(s, n_max)?);
        }
        return Ok(out);
    }
    let mut rec = Recorder {
        suite,
        out: Vec::new(),
    };
    match suite {
        Suite::Seqcore => seqcore_suite(&mut rec, n_max),
        Suite::Eta => eta_suite(&mut rec, n_max),
        Suite::Addrom => addrom_suite(&mut rec, n_max),
        Suite::Gentree => gentree_suite(&mut rec, n_max),
        Suite::Table1 => table1_suite(&mut rec, n_max),
        Suite::Phi => phi_suite(&mut rec, n_max),
        Suite::Series => series_suite(&mut rec),
        Suite::Forms => forms_suite(&mut rec, n_max),
        Suite::Wilf => wilf_suite(&mut rec, n_max),
        Suite::All => unreachable!(),
    }
    Ok(rec.out)
}

fn family(f: FamilyTag, n: usize) -> Result<Vec<Word>> {
    Enumeration::new(f, n).collect()
}

fn revised(n: usize) -> Result<Vec<Word>> {
    family(FamilyTag::RevisedB, n)
}

fn pat(s: &str) -> Pattern {
    Pattern::parse(s).expect("static pattern")
}

fn as_u64(x: &BigUint) -> u64 {
    u64::try_from(x).unwrap_or(u64::MAX)
}

fn seqcore_suite(rec: &mut Recorder, n_max: usize) {
    rec.check(
        "first entry is the maximum, repeated, and equals asctop and ascbot",
        || {
            for n in 1..=n_max {
                for x in revised(n)? {
                    let m = x.max_entry() as usize;
                    let copies = x.entries().iter().filter(|&&v| v as usize == m).count();
                    ensure(
                        x.first() as usize == m
                            && (n < 2 || copies >= 2)
                            && asctop_set(&x).len() == m
                            && ascbot_set(&x).len() == m,
                        || x.to_string(),
                    )?;
                }
            }
            Ok(())
        },
    );
    rec.check("complement pairs families B,C and A,D", || {
        for n in 1..=n_max {
            let b = family(FamilyTag::RevisedB, n)?;
            let c = family(FamilyTag::RevisedC, n)?;
            let a = family(FamilyTag::ModifiedA, n)?;
            let d = family(FamilyTag::RevisedD, n)?;
            ensure(b.len() == c.len() && a.len() == d.len(), || {
                format!("n={n}")
            })?;
            let cb: BTreeSet<Word> = b.iter().map(complement).collect();
            ensure(cb == c.into_iter().collect(), || format!("n={n}"))?;
        }
        Ok(())
    });
    rec.check("revised count is the shifted Fishburn number", || {
        for n in 1..=n_max {
            let got = family(FamilyTag::RevisedB, n)?.len() as u64;
            ensure(got == as_u64(&fishburn_number(n - 1)), || format!("n={n}"))?;
        }
        Ok(())
    });
    rec.check("closing 11 under add agrees with backtracking", || {
        for n in 1..=n_max {
            ensure(enumerate_revised_by_add(n)? == revised(n)?, || {
                format!("n={n}")
            })?;
        }
        Ok(())
    });
    rec.check("complement swaps the statistic sets and fixes nub", || {
        for n in 1..=n_max {
            for x in family(FamilyTag::Cayley, n)? {
                let c = complement(&x);
                ensure(
                    nub(&x) == nub(&c)
                        && asctop_set(&x) == desbot_set(&c)
                        && ascbot_set(&x) == destop_set(&c),
                    || x.to_string(),
                )?;
            }
        }
        Ok(())
    });
    rec.check(
        "words starting with their maximum have asctop = ascbot",
        || {
            for n in 1..=n_max.min(8) {
                for x in family(FamilyTag::Cayley, n)? {
                    if x.first() == x.max_entry() {
                        ensure(asctop_set(&x).len() == ascbot_set(&x).len(), || {
                            x.to_string()
                        })?;
                    }
                }
            }
            Ok(())
        },
    );
}

fn eta_suite(rec: &mut Recorder, n_max: usize) {
    rec.check(
        "eta is a bijection onto revised sequences one longer",
        || {
            for n in 1..=n_max {
                let mut image = BTreeSet::new();
                for x in family(FamilyTag::AscentSeq, n)? {
                    let y = eta(&x)?.output;
                    ensure(crate::seqcore::is_revised(&y), || x.to_string())?;
                    ensure(image.insert(y), || x.to_string())?;
                }
                ensure(image.len() == revised(n + 1)?.len(), || format!("n={n}"))?;
            }
            Ok(())
        },
    );
    rec.check("eta_inverse undoes eta", || {
        for n in 1..=n_max {
            for x in family(FamilyTag::AscentSeq, n)? {
                ensure(eta_inverse(&eta(&x)?.output)? == x, || x.to_string())?;
            }
        }
        Ok(())
    });
    rec.check("eta grows by add and its maximum is asctop", || {
        for n in 1..=n_max {
            for x in family(FamilyTag::AscentSeq, n)? {
                let y = eta(&x)?.output;
                ensure(asctop(x.entries()) == y.max_entry() as usize, || {
                    x.to_string()
                })?;
                if let Some(prev) = x.prefix(n - 1) {
                    let grown = add(&eta(&prev)?.output, x.last())?;
                    ensure(grown == y, || x.to_string())?;
                }
            }
        }
        Ok(())
    });
    rec.check("eta(x) is the relabelling of 1x", || {
        for n in 1..=n_max {
            for x in family(FamilyTag::AscentSeq, n)? {
                let mut one_x = vec![1];
                one_x.extend_from_slice(x.entries());
                let (tilde, _) = relabel_by_ascent_bottoms(&Word::new(one_x)?);
                ensure(tilde == eta(&x)?.output, || x.to_string())?;
            }
        }
        Ok(())
    });
    rec.check("trace shape and preserved ascent bottoms", || {
        for n in 1..=n_max {
            for x in family(FamilyTag::AscentSeq, n)? {
                let t = eta(&x)?;
                ensure(
                    t.output.len() == n + 1
                        && t.output.first() == t.tilde.max_entry()
                        && ascbot_set(&t.input) == ascbot_set(&t.tilde),
                    || x.to_string(),
                )?;
            }
        }
        Ok(())
    });
}

fn addrom_suite(rec: &mut Recorder, n_max: usize) {
    rec.check("add stays in the family and rom undoes it", || {
        for n in 2..=n_max {
            for x in revised(n)? {
                for l in 1..=x.max_entry() + 1 {
                    let y = add(&x, l)?;
                    ensure(crate::seqcore::is_revised(&y), || format!("{x} l={l}"))?;
                    ensure(rom(&y)? == x, || format!("{x} l={l}"))?;
                }
            }
        }
        Ok(())
    });
    rec.check("every longer member is add of its rom", || {
        for n in 2..=n_max {
            for y in revised(n + 1)? {
                let x = rom(&y)?;
                ensure(crate::seqcore::is_revised(&x), || y.to_string())?;
                ensure(add(&x, y.last())? == y, || y.to_string())?;
            }
        }
        Ok(())
    });
}

fn gentree_suite(rec: &mut Recorder, n_max: usize) {
    rec.check(
        "children of each member carry the generic rule's labels",
        || {
            for n in 2..=n_max {
                for x in revised(n)? {
                    let mut got = Vec::new();
                    for l in 1..=x.max_entry() + 1 {
                        got.push(generic_label(&add(&x, l)?));
                    }
                    let mut want = generic_children(generic_label(&x));
                    got.sort();
                    want.sort();
                    ensure(got == want, || x.to_string())?;
                }
            }
            Ok(())
        },
    );
    rec.check("123-avoiding children carry the 123 rule's labels", || {
        let p = pat("123");
        for n in 2..=n_max {
            for x in avoiders(n, &p, FamilyTag::RevisedB)? {
                let mut got: Vec<Label> = Vec::new();
                for l in 1..=x.max_entry() + 1 {
                    let y = add(&x, l)?;
                    if avoids(&y, &p) {
                        got.push(label_123(&y)?);
                    }
                }
                let mut want = children_123(label_123(&x)?)?;
                got.sort();
                want.sort();
                ensure(got == want, || x.to_string())?;
            }
        }
        Ok(())
    });
    rec.check("label DP totals match enumeration", || {
        let generic = count_by_labels(Rule::Generic, n_max.max(2) - 1)?;
        let tree = count_by_labels(Rule::Tree123, n_max.max(2) - 1)?;
        for n in 2..=n_max {
            let lvl = n - 1;
            ensure(
                as_u64(&generic[lvl - 1].total()) == revised(n)?.len() as u64,
                || format!("generic n={n}"),
            )?;
            let brute = count_avoiders(n, &pat("123"), FamilyTag::RevisedB)?;
            ensure(as_u64(&tree[lvl - 1].total()) == brute, || {
                format!("123 n={n}")
            })?;
        }
        Ok(())
    });
    rec.check(
        "label DPs to level 25 match the generating functions",
        || {
            let generic = count_by_labels(Rule::Generic, 25)?;
            let f = fishburn(25);
            for (lvl, row) in generic.iter().enumerate() {
                ensure(row.total() == f[lvl], || {
                    format!("generic level {}", lvl + 1)
                })?;
            }
            let tree = count_by_labels(Rule::Tree123, 25)?;
            let b = expand_gf(GfName::B123, 26)?;
            for (lvl, row) in tree.iter().enumerate() {
                // level k holds words of length k + 1
                ensure(row.total() == b[lvl + 1], || {
                    format!("123 level {}", lvl + 1)
                })?;
            }
            Ok(())
        },
    );
}

fn table1_suite(rec: &mut Recorder, n_max: usize) {
    for row in data::TABLE_ROWS {
        if row == ["111"] {
            continue;
        }
        for &s in row {
            let p = pat(s);
            rec.check(format!("{s} avoiders match the closed form"), || {
                for n in 1..=n_max {
                    let want =
                        closed_form(&p, n).ok_or_else(|| Fail(format!("no form for {s}")))?;
                    let got = count_avoiders(n, &p, FamilyTag::RevisedB)?;
                    ensure(got == as_u64(&want), || {
                        format!("n={n} got {got} want {want}")
                    })?;
                }
                Ok(())
            });
        }
    }
    rec.check("111 avoiders match the known prefix", || {
        let p = pat("111");
        for n in 2..=n_max.min(8) {
            let got = count_avoiders(n, &p, FamilyTag::RevisedB)?;
            ensure(got == data::AVOID_111[n - 2], || format!("n={n} got {got}"))?;
        }
        Ok(())
    });
    for (a, b) in [("231", "321"), ("121", "211")] {
        rec.check(format!("{a} and {b} have the same avoiders"), || {
            for n in 1..=n_max {
                let x = avoiders(n, &pat(a), FamilyTag::RevisedB)?;
                ensure(x == avoiders(n, &pat(b), FamilyTag::RevisedB)?, || {
                    format!("n={n}")
                })?;
            }
            Ok(())
        });
    }
    for s in ["12", "121", "231", "132"] {
        let p = pat(s);
        rec.check(
            format!(
                "{s} and {} have the same avoiders",
                p.with_max_prepended().expect("short")
            ),
            || ensure(check_lemma_main(&p, n_max)?, || s.to_string()),
        );
    }
    rec.check(
        "112 avoiders split by maximum into Stirling numbers",
        || {
            let p = pat("112");
            for n in 2..=n_max {
                let mut by_max: BTreeMap<usize, u64> = BTreeMap::new();
                for x in avoiders(n, &p, FamilyTag::RevisedB)? {
                    *by_max.entry(x.max_entry() as usize).or_default() += 1;
                }
                let mut row = 0u64;
                for m in 1..=n {
                    let want = as_u64(&stirling2(n - 1, n - m));
                    let got = by_max.get(&m).copied().unwrap_or(0);
                    ensure(got == want, || format!("n={n} m={m} got {got}"))?;
                    row += got;
                }
                ensure(row == as_u64(&bell(n - 1)), || format!("n={n}"))?;
            }
            Ok(())
        },
    );
    rec.check("132 system matches its definitional counts", || {
        let st = system_132(n_max);
        let p = pat("132");
        for n in 1..=n_max {
            let words = avoiders(n, &p, FamilyTag::RevisedB)?;
            let m = |x: &Word| x.max_entry();
            let r = words.iter().filter(|x| x.last() == m(x)).count() as u64;
            let s = words
                .iter()
                .filter(|x| n >= 2 && x.last() == m(x) && x.at(n - 1) < m(x))
                .count() as u64;
            ensure(
                as_u64(&st.g[n]) == words.len() as u64
                    && as_u64(&st.r[n]) == r
                    && as_u64(&st.s[n]) == s,
                || format!("n={n}"),
            )?;
            if n >= 2 {
                ensure(st.r[n] == &st.r[n - 1] + &st.s[n], || format!("n={n}"))?;
            }
        }
        Ok(())
    });
    rec.check("s(n+1) counts 123 avoiders", || {
        let st = system_132(n_max + 1);
        for n in 2..=n_max {
            let got = count_avoiders(n, &pat("123"), FamilyTag::RevisedB)?;
            ensure(as_u64(&st.s[n + 1]) == got, || format!("n={n}"))?;
        }
        Ok(())
    });
}

fn phi_suite(rec: &mut Recorder, n_max: usize) {
    rec.check(
        "phi maps 211 avoiders onto 122-avoiding modified sequences",
        || {
            let (p211, p122) = (pat("211"), pat("122"));
            for n in 1..=n_max {
                let target: BTreeSet<Word> = avoiders(n, &p122, FamilyTag::ModifiedA)?
                    .into_iter()
                    .collect();
                let mut image = BTreeSet::new();
                for x in avoiders(n + 1, &p211, FamilyTag::RevisedB)? {
                    let y = phi(&x)?;
                    ensure(target.contains(&y), || x.to_string())?;
                    ensure(image.insert(y), || x.to_string())?;
                }
                ensure(image == target, || format!("n={n}"))?;
            }
            Ok(())
        },
    );
    rec.check("phi(6463612656) = 151412316", || {
        let y = phi(&Word::from_str("6463612656")?)?;
        ensure(y.to_string() == "151412316", || y.to_string())
    });
}

fn series_from(coeffs: &[BigUint], order: usize) -> PowerSeries {
    let mut v = vec![0i64; 1];
    v.extend(coeffs.iter().map(|c| i64::try_from(c).expect("fits")));
    PowerSeries::from_ints(&v, order)
}

fn series_suite(rec: &mut Recorder) {
    const ORDER: usize = 30;
    rec.check("132 series solves its quadratic", || {
        let y = series_from(&expand_gf(GfName::B132, ORDER)?, ORDER);
        let t = PowerSeries::variable(ORDER);
        let t_y = &t * &y;
        let two_t_y = &t_y + &t_y;
        let lhs = &PowerSeries::from_ints(&[1, -2, 1], ORDER) - &two_t_y;
        ensure(&lhs * &lhs == oracle::quartic(ORDER), || "b132".into())
    });
    rec.check("123 series solves its quadratic", || {
        let z = series_from(&expand_gf(GfName::B123, ORDER)?, ORDER);
        let lhs = &(&PowerSeries::from_ints(&[-2, 2], ORDER) * &z)
            - &PowerSeries::from_ints(&[-1, 0, 1], ORDER);
        ensure(&lhs * &lhs == oracle::quartic(ORDER), || "b123".into())
    });
    rec.check("square roots square back", || {
        for a in [
            oracle::quartic(ORDER),
            PowerSeries::from_ints(&[1, 2], ORDER),
        ] {
            let r = a.sqrt()?;
            ensure(&r * &r == a, || a.to_string())?;
        }
        let s = gf_series(GfName::Fishburn, ORDER)?;
        ensure(&s * &PowerSeries::one(ORDER) == s, || "identity".into())
    });
    rec.check("123 coefficients are shifted s values", || {
        let b = expand_gf(GfName::B123, 25)?;
        let st = system_132(26);
        for n in 2..=25 {
            ensure(b[n - 1] == st.s[n + 1], || format!("n={n}"))?;
        }
        Ok(())
    });
    rec.check(
        "Stirling row sums are Bell numbers and the 112 closed form",
        || {
            let p = pat("112");
            for n in 2..=15 {
                let row: BigUint = (1..=n).map(|m| stirling2(n - 1, n - m)).sum();
                let form = closed_form(&p, n).ok_or_else(|| Fail("no 112 form".into()))?;
                ensure(row == bell(n - 1) && row == form, || format!("n={n}"))?;
            }
            Ok(())
        },
    );
    rec.check("213 recurrence matches the Catalan series", || {
        let f = recurrence_213(25);
        let b = expand_gf(GfName::B213, 25)?;
        ensure(f == b, || "213".into())
    });
    rec.check("Fishburn numbers match the generic tree", || {
        let f = fishburn(25);
        let dp = count_by_labels(Rule::Generic, 25)?;
        ensure(dp.iter().zip(&f).all(|(l, v)| &l.total() == v), || {
            "fishburn".into()
        })?;
        ensure(expand_gf(GfName::Fishburn, 25)? == f, || {
            "fishburn series".into()
        })
    });
    rec.check("known sequence prefixes", || {
        let u = |v: Vec<BigUint>| v.iter().map(as_u64).collect::<Vec<_>>();
        ensure(u(fishburn(7)) == data::FISHBURN, || "fishburn".into())?;
        ensure(
            u(expand_gf(GfName::B123, 10)?)[1..] == data::AVOID_123,
            || "b123".into(),
        )?;
        ensure(u(expand_gf(GfName::B132, 10)?) == data::AVOID_132, || {
            "b132".into()
        })
    });
}

fn forms_suite(rec: &mut Recorder, n_max: usize) {
    for form in Form::ALL {
        rec.check(format!("{form} accepts exactly the avoiders"), || {
            let p = form.pattern();
            for n in 2..=n_max {
                for x in revised(n)? {
                    ensure(structural_form_check(&x, form) == avoids(&x, &p), || {
                        x.to_string()
                    })?;
                }
            }
            Ok(())
        });
    }
    rec.check("avoidance is monotone under pattern containment", || {
        let pats: Vec<Pattern> = (1..=4)
            .map(all_patterns)
            .collect::<Result<Vec<_>>>()?
            .concat();
        let pairs: Vec<(usize, usize)> = (0..pats.len())
            .flat_map(|i| (0..pats.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j && pats[i].is_contained_in(&pats[j]))
            .collect();
        for n in 1..=n_max.min(7) {
            for x in family(FamilyTag::Cayley, n)? {
                let av: Vec<bool> = pats.iter().map(|p| avoids(&x, p)).collect();
                for &(i, j) in &pairs {
                    ensure(!av[i] || av[j], || format!("{x} {} {}", pats[i], pats[j]))?;
                }
            }
        }
        Ok(())
    });
}

fn wilf_suite(rec: &mut Recorder, n_max: usize) {
    let n_max = n_max.max(6);
    rec.check("length-3 classes are the table rows", || {
        let report = wilf_classes(3, n_max)?;
        let got: BTreeSet<BTreeSet<String>> = report
            .classes
            .iter()
            .map(|c| c.patterns.iter().map(|p| p.to_string()).collect())
            .collect();
        let want: BTreeSet<BTreeSet<String>> = data::TABLE_ROWS
            .iter()
            .map(|row| {
                row.iter()
                    .filter(|s| s.len() == 3)
                    .map(|s| s.to_string())
                    .collect()
            })
            .filter(|row: &BTreeSet<String>| !row.is_empty())
            .collect();
        ensure(got == want, || format!("{got:?}"))
    });
    rec.check("short patterns", || {
        ensure(wilf_classes(1, n_max)?.classes.len() == 1, || "k=1".into())?;
        let two = wilf_classes(2, n_max)?;
        let sizes: Vec<usize> = two.classes.iter().map(|c| c.patterns.len()).collect();
        ensure(sizes == [1, 2], || format!("{sizes:?}"))
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_at_small_length() {
        for r in run_suite(Suite::All, 6).unwrap() {
            assert!(r.pass, "{r}");
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
        assert!(run_suite(Suite::Eta, 0).is_err());
    }
}
