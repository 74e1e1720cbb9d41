//! Seeded random formula generation for property tests.
//!
//! Generation is driven by the precedence tables, so each logic gets exactly
//! the operators its grammar has.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::ast::{Atom, Constant, Formula, Operator, Regex};
use crate::table::Assoc;

const CONSTANTS: [Constant; 8] = [
    Constant::True,
    Constant::False,
    Constant::Tt,
    Constant::Ff,
    Constant::Last,
    Constant::End,
    Constant::First,
    Constant::Start,
];

#[derive(Debug, Clone)]
pub struct Generator {
    atoms: Vec<Atom>,
    /// Chance of stopping at a leaf before the depth bound is reached.
    pub leaf_bias: f64,
}

impl Default for Generator {
    /// Atoms `p`, `q`, `r` and the quoted `"Quoted Atom"`.
    fn default() -> Self {
        Generator::new(vec![
            Atom::new("p"),
            Atom::new("q"),
            Atom::new("r"),
            Atom::quoted("Quoted Atom"),
        ])
    }
}

impl Generator {
    pub fn new(atoms: Vec<Atom>) -> Self {
        assert!(!atoms.is_empty(), "need at least one atom");
        Generator {
            atoms,
            leaf_bias: 0.2,
        }
    }

    fn leaf<F: Formula, R: Rng>(&self, rng: &mut R) -> F {
        let atom_ok = F::from_atom(self.atoms[0].clone()).is_some();
        let constants: Vec<F> = CONSTANTS
            .iter()
            .filter_map(|&c| F::from_constant(c))
            .collect();
        // Favour atoms when the logic has them; they make traces matter.
        if atom_ok && rng.gen_bool(0.6) {
            let atom = self.atoms.choose(rng).unwrap().clone();
            return F::from_atom(atom).unwrap();
        }
        constants
            .choose(rng)
            .expect("every logic has constants")
            .clone()
    }

    /// A formula whose tree height is at most `depth` (leaves have height 1;
    /// regex and propositional nodes count).
    pub fn formula<F: Formula, R: Rng>(&self, rng: &mut R, depth: usize) -> F {
        if depth <= 1 || rng.gen_bool(self.leaf_bias) {
            return self.leaf(rng);
        }
        let table = F::table();
        let levels: Vec<_> = table
            .levels
            .iter()
            .filter(|l| !matches!(l.assoc, Assoc::Postfix))
            .filter(|l| {
                !l.ops
                    .iter()
                    .any(|op| matches!(op, Operator::Concat | Operator::Union))
            })
            .collect();
        let level = levels.choose(rng).unwrap();
        let op = *level.ops.choose(rng).unwrap();
        match level.assoc {
            Assoc::Prefix => F::from_prefix(op, self.formula(rng, depth - 1)),
            Assoc::Left | Assoc::Right => F::from_infix(
                op,
                self.formula(rng, depth - 1),
                self.formula(rng, depth - 1),
            ),
            Assoc::Modality => {
                F::from_modality(op, self.regex(rng, depth - 1), self.formula(rng, depth - 1))
            }
            Assoc::Postfix => unreachable!(),
        }
    }

    /// A path expression of height at most `depth`, with tests drawn from `F`.
    pub fn regex<F: Formula, R: Rng>(&self, rng: &mut R, depth: usize) -> Regex<F> {
        if depth <= 2 || rng.gen_bool(self.leaf_bias) {
            return if depth >= 2 && rng.gen_bool(0.3) {
                Regex::test(self.formula(rng, depth - 1))
            } else {
                Regex::prop(self.formula(rng, depth.saturating_sub(1).max(1)))
            };
        }
        match rng.gen_range(0..5) {
            0 => Regex::prop(self.formula(rng, depth - 1)),
            1 => Regex::test(self.formula(rng, depth - 1)),
            2 => Regex::concat(self.regex(rng, depth - 1), self.regex(rng, depth - 1)),
            3 => Regex::union(self.regex(rng, depth - 1), self.regex(rng, depth - 1)),
            _ => Regex::star(self.regex(rng, depth - 1)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::{LdlfFormula, LtlfFormula, PldlfFormula, PltlfFormula, View};
    use rand::SeedableRng;

    fn height<F: Formula>(f: &F) -> usize {
        match f.view() {
            View::Atom(_) | View::Constant(_) => 1,
            View::Prefix(_, a) => 1 + height(a),
            View::Infix(_, l, r) => 1 + height(l).max(height(r)),
            View::Modality(_, re, a) => 1 + regex_height(re).max(height(a)),
        }
    }

    fn regex_height<F: Formula>(r: &Regex<F>) -> usize {
        match r {
            Regex::Prop(p) => height(p),
            Regex::Test(f) => height(f.as_ref()),
            Regex::Concat(a, b) | Regex::Union(a, b) => 1 + regex_height(a).max(regex_height(b)),
            Regex::Star(a) => 1 + regex_height(a),
        }
    }

    fn check_bound<F: Formula>() {
        let gen = Generator::default();
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for depth in 1..=6 {
            for _ in 0..200 {
                let f: F = gen.formula(&mut rng, depth);
                assert!(height(&f) <= depth, "{f:?} exceeds {depth}");
            }
        }
    }

    #[test]
    fn depth_bound_holds() {
        check_bound::<LtlfFormula>();
        check_bound::<PltlfFormula>();
        check_bound::<LdlfFormula>();
        check_bound::<PldlfFormula>();
    }

    #[test]
    fn same_seed_same_formulae() {
        let gen = Generator::default();
        let mut a = rand::rngs::StdRng::seed_from_u64(1);
        let mut b = rand::rngs::StdRng::seed_from_u64(1);
        for _ in 0..50 {
            let x: LdlfFormula = gen.formula(&mut a, 5);
            let y: LdlfFormula = gen.formula(&mut b, 5);
            assert_eq!(x, y);
        }
    }
}
