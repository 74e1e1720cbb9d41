//! Evaluator checks: fixed examples plus agreement with a direct,
//! definition-by-definition recursive evaluator on random formulae.

use std::collections::BTreeSet;

use fintl::random::Generator;
use fintl::semantics::{eval_prop, regex_reach};
use fintl::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn trace(steps: &[&[&str]]) -> Trace {
    Trace::from_steps(steps).unwrap()
}

#[test]
fn ltlf_examples() {
    let f = |s| parse_ltlf(s).unwrap();
    assert!(!semantics::eval_ltlf(&f("X[!] p"), &trace(&[&["p"]]), 0).unwrap());
    let two = trace(&[&[], &[]]);
    assert!(semantics::eval_ltlf(&f("X false"), &two, 1).unwrap());
    assert!(!semantics::eval_ltlf(&f("X false"), &two, 0).unwrap());
    assert!(!semantics::eval_ltlf(&f("end"), &trace(&[&["p"]]), 0).unwrap());
    assert!(f("F b").satisfied_by(&trace(&[&["a"], &["b"]])).unwrap());
    assert!(f("last").satisfied_by(&trace(&[&["a"]])).unwrap());
    assert_eq!(
        f("p").satisfied_by(&trace(&[])),
        Err(EvalError::EmptyTrace { logic: Logic::Ltlf })
    );
    assert_eq!(
        semantics::eval_ltlf(&f("p"), &two, 2),
        Err(EvalError::PositionOutOfRange {
            position: 2,
            min: 0,
            max: 1
        })
    );
}

#[test]
fn pltlf_examples() {
    let f = |s| parse_pltlf(s).unwrap();
    let t = trace(&[&["p"], &["q"]]);
    assert!(semantics::eval_pltlf(&f("first"), &t, 0).unwrap());
    assert!(!semantics::eval_pltlf(&f("first"), &t, 1).unwrap());
    assert!(!semantics::eval_pltlf(&f("H a"), &trace(&[&["a"], &[]]), 1).unwrap());
    assert!(f("Y p").satisfied_by(&t).unwrap());
    assert!(f("q S p").satisfied_by(&t).unwrap());
    assert!(!f("O r").satisfied_by(&t).unwrap());
}

#[test]
fn ldlf_examples() {
    let f = |s| parse_ldlf(s).unwrap();
    let one = trace(&[&[]]);
    assert!(semantics::eval_ldlf(&f("<true>tt"), &one, 0).unwrap());
    assert!(!semantics::eval_ldlf(&f("<true>tt"), &one, 1).unwrap());
    assert!(semantics::eval_ldlf(&f("tt"), &one, 1).unwrap());
    assert!(semantics::eval_ldlf(&f("tt"), &trace(&[]), 0).unwrap());
    assert!(f("<true*>[true]ff")
        .satisfied_by(&trace(&[&["a"], &[]]))
        .unwrap());
    assert!(f("[true*](<a>tt | [true]ff)")
        .satisfied_by(&trace(&[&["a"]]))
        .unwrap());
}

#[test]
fn pldlf_examples() {
    let f = |s| parse_pldlf(s).unwrap();
    let one = trace(&[&["b"]]);
    assert!(semantics::eval_pldlf(&f("<<true>>tt"), &one, 0).unwrap());
    assert!(!semantics::eval_pldlf(&f("<<a>>tt"), &one, 0).unwrap());
    assert!(semantics::eval_pldlf(&f("tt"), &trace(&[]), -1).unwrap());
    assert!(f("tt").satisfied_by(&trace(&[])).unwrap());
    assert!(!f("<<true>>tt").satisfied_by(&trace(&[])).unwrap());
}

#[test]
fn reach_examples() {
    let t = trace(&[&[], &[]]);
    let r: Regex<LdlfFormula> = Regex::prop(Prop::True);
    assert_eq!(regex_reach(&r, &t).pairs(), vec![(0, 1), (1, 2)]);
    let id: Regex<LdlfFormula> = Regex::test(LdlfFormula::Tt);
    assert_eq!(regex_reach(&id, &t), Relation::identity(0..=2));
    let back: Regex<PldlfFormula> = Regex::prop(Prop::True);
    assert_eq!(regex_reach(&back, &t).pairs(), vec![(0, -1), (1, 0)]);
    let star: Regex<LdlfFormula> = Regex::star(Regex::prop(Prop::atom("a")));
    let rel = regex_reach(&star, &t);
    assert!((0..=2).all(|i| rel.contains(i, i)));
}

#[test]
fn traces_from_json() {
    let t = Trace::from_json(r#"[["p"],["p","q"],[]]"#).unwrap();
    assert_eq!(t.len(), 3);
    assert!(t.steps()[1].contains("q"));
    assert!(Trace::from_json("[").is_err());
    assert!(Trace::from_json(r#"[["p"], 3]"#).is_err());
    assert!(matches!(
        Trace::from_json(r#"[[""]]"#),
        Err(TraceError::EmptyName { step: 0 })
    ));
}

// Direct evaluator: each clause restates the quantified definition.

fn step(t: &Trace, i: isize) -> &BTreeSet<String> {
    &t.steps()[i as usize]
}

fn naive_ltlf(f: &LtlfFormula, t: &Trace, i: isize) -> bool {
    use LtlfFormula::*;
    let n = t.len() as isize;
    let ev = |g: &LtlfFormula, j: isize| naive_ltlf(g, t, j);
    let until =
        |a: &LtlfFormula, b: &LtlfFormula| (i..n).any(|j| ev(b, j) && (i..j).all(|k| ev(a, k)));
    match f {
        Atom(a) => step(t, i).contains(&a.name),
        True | Tt => true,
        False | Ff | End => false,
        Last => i == n - 1,
        Not(a) => !ev(a, i),
        And(a, b) => ev(a, i) && ev(b, i),
        Or(a, b) => ev(a, i) || ev(b, i),
        Impl(a, b) => !ev(a, i) || ev(b, i),
        Equiv(a, b) => ev(a, i) == ev(b, i),
        Xor(a, b) => ev(a, i) != ev(b, i),
        StrongNext(a) => i < n - 1 && ev(a, i + 1),
        WeakNext(a) => i == n - 1 || ev(a, i + 1),
        Until(a, b) => until(a, b),
        WeakUntil(a, b) => until(a, b) || (i..n).all(|j| ev(a, j)),
        Release(a, b) => (i..n).all(|j| ev(b, j) || (i..j).any(|k| ev(a, k))),
        StrongRelease(a, b) => (i..n).any(|j| ev(a, j) && ev(b, j) && (i..j).all(|k| ev(b, k))),
        Eventually(a) => (i..n).any(|j| ev(a, j)),
        Always(a) => (i..n).all(|j| ev(a, j)),
    }
}

fn naive_pltlf(f: &PltlfFormula, t: &Trace, i: isize) -> bool {
    use PltlfFormula::*;
    let ev = |g: &PltlfFormula, j: isize| naive_pltlf(g, t, j);
    match f {
        Atom(a) => step(t, i).contains(&a.name),
        True | Tt => true,
        False | Ff | Start => false,
        First => i == 0,
        Not(a) => !ev(a, i),
        And(a, b) => ev(a, i) && ev(b, i),
        Or(a, b) => ev(a, i) || ev(b, i),
        Impl(a, b) => !ev(a, i) || ev(b, i),
        Equiv(a, b) => ev(a, i) == ev(b, i),
        Xor(a, b) => ev(a, i) != ev(b, i),
        Before(a) => i > 0 && ev(a, i - 1),
        Since(a, b) => (0..=i).any(|j| ev(b, j) && (j + 1..=i).all(|k| ev(a, k))),
        Once(a) => (0..=i).any(|j| ev(a, j)),
        Historically(a) => (0..=i).all(|j| ev(a, j)),
    }
}

/// Positions reachable from `i`, by worklist search over single steps.
fn naive_reach<F>(
    r: &Regex<F>,
    t: &Trace,
    i: isize,
    forward: bool,
    test: &dyn Fn(&F, isize) -> bool,
) -> BTreeSet<isize> {
    match r {
        Regex::Prop(p) => {
            let ok = if forward {
                i < t.len() as isize
            } else {
                i >= 0
            };
            if ok && eval_prop(p, step(t, i)) {
                BTreeSet::from([if forward { i + 1 } else { i - 1 }])
            } else {
                BTreeSet::new()
            }
        }
        Regex::Test(f) => {
            if test(f, i) {
                BTreeSet::from([i])
            } else {
                BTreeSet::new()
            }
        }
        Regex::Concat(a, b) => naive_reach(a, t, i, forward, test)
            .into_iter()
            .flat_map(|j| naive_reach(b, t, j, forward, test))
            .collect(),
        Regex::Union(a, b) => {
            let mut out = naive_reach(a, t, i, forward, test);
            out.extend(naive_reach(b, t, i, forward, test));
            out
        }
        Regex::Star(a) => {
            let mut seen = BTreeSet::from([i]);
            let mut todo = vec![i];
            while let Some(j) = todo.pop() {
                for k in naive_reach(a, t, j, forward, test) {
                    if seen.insert(k) {
                        todo.push(k);
                    }
                }
            }
            seen
        }
    }
}

fn naive_ldlf(f: &LdlfFormula, t: &Trace, i: isize) -> bool {
    use LdlfFormula::*;
    let ev = |g: &LdlfFormula, j: isize| naive_ldlf(g, t, j);
    let reach = |r: &Regex<LdlfFormula>| naive_reach(r, t, i, true, &|g, j| naive_ldlf(g, t, j));
    match f {
        Tt => true,
        Ff => false,
        Not(a) => !ev(a, i),
        And(a, b) => ev(a, i) && ev(b, i),
        Or(a, b) => ev(a, i) || ev(b, i),
        Impl(a, b) => !ev(a, i) || ev(b, i),
        Equiv(a, b) => ev(a, i) == ev(b, i),
        Xor(a, b) => ev(a, i) != ev(b, i),
        Diamond(r, a) => reach(r).into_iter().any(|j| ev(a, j)),
        Box(r, a) => reach(r).into_iter().all(|j| ev(a, j)),
    }
}

fn naive_pldlf(f: &PldlfFormula, t: &Trace, i: isize) -> bool {
    use PldlfFormula::*;
    let ev = |g: &PldlfFormula, j: isize| naive_pldlf(g, t, j);
    let reach = |r: &Regex<PldlfFormula>| naive_reach(r, t, i, false, &|g, j| naive_pldlf(g, t, j));
    match f {
        Tt => true,
        Ff => false,
        Not(a) => !ev(a, i),
        And(a, b) => ev(a, i) && ev(b, i),
        Or(a, b) => ev(a, i) || ev(b, i),
        Impl(a, b) => !ev(a, i) || ev(b, i),
        Equiv(a, b) => ev(a, i) == ev(b, i),
        Xor(a, b) => ev(a, i) != ev(b, i),
        BackDiamond(r, a) => reach(r).into_iter().any(|j| ev(a, j)),
        BackBox(r, a) => reach(r).into_iter().all(|j| ev(a, j)),
    }
}

fn traces(max_len: usize) -> Vec<Trace> {
    let letters = [vec![], vec!["p"], vec!["q"], vec!["p", "q"]];
    let mut out = vec![Trace::default()];
    let mut frontier: Vec<Vec<Vec<&str>>> = vec![vec![]];
    for _ in 0..max_len {
        frontier = frontier
            .into_iter()
            .flat_map(|prefix| {
                letters.iter().map(move |l| {
                    let mut p = prefix.clone();
                    p.push(l.clone());
                    p
                })
            })
            .collect();
        for steps in &frontier {
            let steps: Vec<&[&str]> = steps.iter().map(|s| s.as_slice()).collect();
            out.push(trace(&steps));
        }
    }
    out
}

fn agree<F: Semantics>(naive: fn(&F, &Trace, isize) -> bool, seed: u64) {
    let gen = Generator::new(vec![fintl::Atom::new("p"), fintl::Atom::new("q")]);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all = traces(3);
    for _ in 0..150 {
        let f: F = gen.formula(&mut rng, 4);
        for t in &all {
            let Ok(range) = F::positions(t.len()) else {
                continue;
            };
            let fast = f.evaluate_all(t).unwrap();
            for (i, got) in range.zip(fast) {
                assert_eq!(got, naive(&f, t, i), "{f:?} on {t:?} at {i}");
            }
        }
    }
}

#[test]
fn ltlf_agrees_with_direct_definitions() {
    agree::<LtlfFormula>(naive_ltlf, 11);
}

#[test]
fn pltlf_agrees_with_direct_definitions() {
    agree::<PltlfFormula>(naive_pltlf, 12);
}

#[test]
fn ldlf_agrees_with_direct_definitions() {
    agree::<LdlfFormula>(naive_ldlf, 13);
}

#[test]
fn pldlf_agrees_with_direct_definitions() {
    agree::<PldlfFormula>(naive_pldlf, 14);
}
