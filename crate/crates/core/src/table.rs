//! Operator precedence tables, as data.
//!
//! Levels are listed from lowest to highest priority. The parser and the
//! printer both read these tables, so they are the only place where binding
//! strength is defined.

use crate::ast::Operator::{self, *};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Assoc {
    Left,
    Right,
    Prefix,
    Postfix,
    /// Bracketed modalities (`<r>`, `[r]`, `<<r>>`, `[[r]]`), applied like
    /// prefix operators.
    Modality,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Level {
    pub ops: &'static [Operator],
    pub assoc: Assoc,
}

#[derive(Debug, PartialEq, Eq)]
pub struct PrecedenceTable {
    pub levels: &'static [Level],
}

impl PrecedenceTable {
    /// Index (0 = loosest) and associativity of `op`, if the table has it.
    pub fn level_of(&self, op: Operator) -> Option<(usize, Assoc)> {
        self.levels
            .iter()
            .enumerate()
            .find(|(_, l)| l.ops.contains(&op))
            .map(|(i, l)| (i, l.assoc))
    }

    pub fn contains(&self, op: Operator) -> bool {
        self.level_of(op).is_some()
    }

    pub fn operators(&self) -> impl Iterator<Item = Operator> + '_ {
        self.levels.iter().flat_map(|l| l.ops.iter().copied())
    }
}

const fn level(ops: &'static [Operator], assoc: Assoc) -> Level {
    Level { ops, assoc }
}

const BOOLEAN_LEVELS: [Level; 4] = [
    level(&[Impl, Equiv], Assoc::Right),
    level(&[Xor], Assoc::Left),
    level(&[Or], Assoc::Left),
    level(&[And], Assoc::Left),
];

pub static LTLF: PrecedenceTable = PrecedenceTable {
    levels: &[
        BOOLEAN_LEVELS[0],
        BOOLEAN_LEVELS[1],
        BOOLEAN_LEVELS[2],
        BOOLEAN_LEVELS[3],
        level(&[Until, WeakUntil, StrongRelease, Release], Assoc::Right),
        level(&[Eventually, Always], Assoc::Prefix),
        level(&[WeakNext, StrongNext], Assoc::Prefix),
        level(&[Not], Assoc::Prefix),
    ],
};

pub static PLTLF: PrecedenceTable = PrecedenceTable {
    levels: &[
        BOOLEAN_LEVELS[0],
        BOOLEAN_LEVELS[1],
        BOOLEAN_LEVELS[2],
        BOOLEAN_LEVELS[3],
        level(&[Since], Assoc::Right),
        level(&[Once, Historically], Assoc::Prefix),
        level(&[Before], Assoc::Prefix),
        level(&[Not], Assoc::Prefix),
    ],
};

pub static LDLF: PrecedenceTable = PrecedenceTable {
    levels: &[
        BOOLEAN_LEVELS[0],
        BOOLEAN_LEVELS[1],
        BOOLEAN_LEVELS[2],
        BOOLEAN_LEVELS[3],
        level(&[Diamond, Box], Assoc::Modality),
        level(&[Concat], Assoc::Left),
        level(&[Union], Assoc::Left),
        level(&[Star], Assoc::Postfix),
        level(&[Test], Assoc::Postfix),
        level(&[Not], Assoc::Prefix),
    ],
};

pub static PLDLF: PrecedenceTable = PrecedenceTable {
    levels: &[
        BOOLEAN_LEVELS[0],
        BOOLEAN_LEVELS[1],
        BOOLEAN_LEVELS[2],
        BOOLEAN_LEVELS[3],
        level(&[BackDiamond, BackBox], Assoc::Modality),
        level(&[Concat], Assoc::Left),
        level(&[Union], Assoc::Left),
        level(&[Star], Assoc::Postfix),
        level(&[Test], Assoc::Postfix),
        level(&[Not], Assoc::Prefix),
    ],
};

/// Boolean connectives of the propositional letters inside path expressions.
pub static PROPOSITIONAL: PrecedenceTable = PrecedenceTable {
    levels: &[
        BOOLEAN_LEVELS[0],
        BOOLEAN_LEVELS[1],
        BOOLEAN_LEVELS[2],
        BOOLEAN_LEVELS[3],
        level(&[Not], Assoc::Prefix),
    ],
};

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_operator_appears_once_per_table() {
        for table in [&LTLF, &PLTLF, &LDLF, &PLDLF, &PROPOSITIONAL] {
            let ops: Vec<_> = table.operators().collect();
            for op in &ops {
                assert_eq!(ops.iter().filter(|o| *o == op).count(), 1, "{op:?}");
            }
        }
    }

    #[test]
    fn lookups() {
        assert_eq!(LTLF.level_of(Impl), Some((0, Assoc::Right)));
        assert_eq!(LTLF.level_of(Release), Some((4, Assoc::Right)));
        assert_eq!(LTLF.level_of(Not), Some((7, Assoc::Prefix)));
        assert_eq!(LDLF.level_of(Concat), Some((5, Assoc::Left)));
        assert_eq!(PLDLF.level_of(Test), Some((8, Assoc::Postfix)));
        assert!(!PLTLF.contains(Until));
        assert!(!LDLF.contains(BackDiamond));
    }

    fn spelled(table: &PrecedenceTable) -> Vec<String> {
        table
            .levels
            .iter()
            .map(|l| {
                let ops: Vec<_> = l.ops.iter().map(|op| op.symbol()).collect();
                format!("{:?} {}", l.assoc, ops.join(" "))
            })
            .collect()
    }

    #[test]
    fn level_order() {
        let booleans = ["Right -> <->", "Left ^", "Left |", "Left &"];
        let with = |rest: &[&str]| -> Vec<String> {
            booleans.iter().chain(rest).map(|s| s.to_string()).collect()
        };
        assert_eq!(
            spelled(&LTLF),
            with(&["Right U W M R", "Prefix F G", "Prefix X X[!]", "Prefix !"])
        );
        assert_eq!(
            spelled(&PLTLF),
            with(&["Right S", "Prefix O H", "Prefix Y", "Prefix !"])
        );
        let regex = ["Left ;", "Left +", "Postfix *", "Postfix ?", "Prefix !"];
        let mut ldlf = vec!["Modality < ["];
        ldlf.extend(regex);
        assert_eq!(spelled(&LDLF), with(&ldlf));
        ldlf[0] = "Modality << [[";
        assert_eq!(spelled(&PLDLF), with(&ldlf));
        assert_eq!(spelled(&PROPOSITIONAL), with(&["Prefix !"]));
    }
}
