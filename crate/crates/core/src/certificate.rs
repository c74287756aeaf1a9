//! Cycle-decomposition certificates and their validation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{walk_cycle, SignedMultigraph};

/// A partition of a graph's edges into simple cycles, each listed as a
/// closed walk of edge indices. At most one cycle may be flagged as the odd
/// cycle of an almost even-cycle decomposition.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CycleDecomposition {
    pub cycles: Vec<Vec<usize>>,
    pub odd_cycle_index: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    UnknownEdge,
    NotACycle,
    NotAPartition,
    OddCycle,
    FlaggedCycleEven,
    BadFlag,
}

impl ViolationKind {
    pub fn reason(self) -> &'static str {
        match self {
            ViolationKind::UnknownEdge => "unknown edge",
            ViolationKind::NotACycle => "not a cycle",
            ViolationKind::NotAPartition => "not a partition",
            ViolationKind::OddCycle => "odd cycle",
            ViolationKind::FlaggedCycleEven => "flagged cycle is even",
            ViolationKind::BadFlag => "odd cycle index out of range",
        }
    }
}

/// First failing check of a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub cycle: Option<usize>,
    pub kind: ViolationKind,
    pub reason: String,
    pub detail: String,
}

impl Violation {
    fn new(cycle: Option<usize>, kind: ViolationKind, detail: impl Into<String>) -> Self {
        Violation {
            cycle,
            kind,
            reason: kind.reason().to_string(),
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.cycle {
            Some(c) => write!(f, "cycle {c}: {} ({})", self.reason, self.detail),
            None => write!(f, "{} ({})", self.reason, self.detail),
        }
    }
}

/// Checks partition, simplicity and parity of every cycle.
pub fn validate_certificate(g: &SignedMultigraph, d: &CycleDecomposition) -> Result<(), Violation> {
    let ends = g.ends();
    if let Some(flag) = d.odd_cycle_index {
        if flag >= d.cycles.len() {
            return Err(Violation::new(
                None,
                ViolationKind::BadFlag,
                format!("index {flag} with {} cycles", d.cycles.len()),
            ));
        }
    }
    let mut owner: Vec<Option<usize>> = vec![None; g.edge_count()];
    for (i, cycle) in d.cycles.iter().enumerate() {
        if let Some(&e) = cycle.iter().find(|&&e| e >= g.edge_count()) {
            return Err(Violation::new(Some(i), ViolationKind::UnknownEdge, format!("#{e}")));
        }
        if let Err(why) = walk_cycle(&ends, cycle) {
            return Err(Violation::new(Some(i), ViolationKind::NotACycle, why));
        }
        for &e in cycle {
            if let Some(j) = owner[e] {
                return Err(Violation::new(
                    Some(i),
                    ViolationKind::NotAPartition,
                    format!("edge {} also used by cycle {j}", g.edge(e).id),
                ));
            }
            owner[e] = Some(i);
        }
        let odd = cycle.iter().filter(|&&e| g.edge(e).is_odd()).count() % 2 == 1;
        let flagged = d.odd_cycle_index == Some(i);
        if odd && !flagged {
            return Err(Violation::new(
                Some(i),
                ViolationKind::OddCycle,
                format!("{} edges, odd number of odd edges", cycle.len()),
            ));
        }
        if !odd && flagged {
            return Err(Violation::new(Some(i), ViolationKind::FlaggedCycleEven, ""));
        }
    }
    if let Some(e) = owner.iter().position(Option::is_none) {
        return Err(Violation::new(
            None,
            ViolationKind::NotAPartition,
            format!("edge {} is not covered", g.edge(e).id),
        ));
    }
    Ok(())
}

/// On-disk certificate format: cycles as edge ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub cycles: Vec<Vec<String>>,
    pub odd_cycle_index: Option<usize>,
}

impl CycleDecomposition {
    pub fn new(cycles: Vec<Vec<usize>>) -> Self {
        CycleDecomposition {
            cycles,
            odd_cycle_index: None,
        }
    }

    pub fn max_cycle_len(&self) -> usize {
        self.cycles.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Orders each cycle's edges into a closed walk and sorts the cycles by
    /// their smallest edge, keeping any odd-cycle flag attached.
    pub fn from_edge_sets(g: &SignedMultigraph, sets: Vec<Vec<usize>>, odd: Option<usize>) -> Result<Self> {
        let mut tagged = Vec::with_capacity(sets.len());
        for (i, set) in sets.into_iter().enumerate() {
            tagged.push((g.order_cycle(&set)?, odd == Some(i)));
        }
        tagged.sort_by_key(|(c, _)| *c.iter().min().expect("non-empty cycle"));
        let odd_cycle_index = tagged.iter().position(|(_, f)| *f);
        Ok(CycleDecomposition {
            cycles: tagged.into_iter().map(|(c, _)| c).collect(),
            odd_cycle_index,
        })
    }

    pub fn to_file(&self, g: &SignedMultigraph) -> CertificateFile {
        CertificateFile {
            cycles: self
                .cycles
                .iter()
                .map(|c| c.iter().map(|&e| g.edge(e).id.clone()).collect())
                .collect(),
            odd_cycle_index: self.odd_cycle_index,
        }
    }

    pub fn from_file(g: &SignedMultigraph, f: &CertificateFile) -> Result<Self> {
        let cycles = f
            .cycles
            .iter()
            .map(|c| c.iter().map(|id| g.edge_by_id(id)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(CycleDecomposition {
            cycles,
            odd_cycle_index: f.odd_cycle_index,
        })
    }

    pub fn to_json(&self, g: &SignedMultigraph) -> String {
        serde_json::to_string_pretty(&self.to_file(g)).expect("certificate serializes")
    }

    pub fn from_json(g: &SignedMultigraph, text: &str) -> Result<Self> {
        let f: CertificateFile = serde_json::from_str(text).map_err(Error::from)?;
        Self::from_file(g, &f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::Parity;

    #[test]
    fn single_even_cycle_validates() {
        let c4 = cycle(4, Parity::Even);
        let d = CycleDecomposition::new(vec![vec![0, 1, 2, 3]]);
        assert_eq!(validate_certificate(&c4, &d), Ok(()));
    }

    #[test]
    fn k5_two_five_cycles_are_odd() {
        let k5 = complete(5, Parity::Odd);
        let e = |a: usize, b: usize| k5.edges_between(a, b)[0];
        let c1 = vec![e(0, 1), e(1, 2), e(2, 3), e(3, 4), e(4, 0)];
        let c2 = vec![e(0, 2), e(2, 4), e(4, 1), e(1, 3), e(3, 0)];
        let d = CycleDecomposition::new(vec![c1, c2]);
        let v = validate_certificate(&k5, &d).unwrap_err();
        assert_eq!(v.kind, ViolationKind::OddCycle);
        assert_eq!(v.cycle, Some(0));
    }

    #[test]
    fn missing_edge_is_not_a_partition() {
        let g = from_pairs(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (2, 0)], Parity::Even);
        let d = CycleDecomposition::new(vec![vec![0, 1, 2, 3], vec![4, 5]]);
        assert_eq!(validate_certificate(&g, &d), Ok(()));
        let short = CycleDecomposition::new(vec![vec![0, 1, 2, 3]]);
        assert_eq!(validate_certificate(&g, &short).unwrap_err().kind, ViolationKind::NotAPartition);
        let twice = CycleDecomposition::new(vec![vec![0, 1, 2, 3], vec![4, 5], vec![4, 5]]);
        assert_eq!(validate_certificate(&g, &twice).unwrap_err().kind, ViolationKind::NotAPartition);
    }

    #[test]
    fn flags_are_checked() {
        let c4 = cycle(4, Parity::Even).with_odd_edges(&[2]).unwrap();
        let mut d = CycleDecomposition::new(vec![vec![0, 1, 2, 3]]);
        assert_eq!(validate_certificate(&c4, &d).unwrap_err().kind, ViolationKind::OddCycle);
        d.odd_cycle_index = Some(0);
        assert_eq!(validate_certificate(&c4, &d), Ok(()));
        d.odd_cycle_index = Some(3);
        assert_eq!(validate_certificate(&c4, &d).unwrap_err().kind, ViolationKind::BadFlag);
        let even = cycle(4, Parity::Even);
        d.odd_cycle_index = Some(0);
        assert_eq!(validate_certificate(&even, &d).unwrap_err().kind, ViolationKind::FlaggedCycleEven);
    }

    #[test]
    fn json_uses_edge_ids() {
        let c4 = cycle(4, Parity::Even);
        let d = CycleDecomposition::new(vec![vec![0, 1, 2, 3]]);
        let text = d.to_json(&c4);
        assert!(text.contains("\"e0\""));
        assert!(text.contains("\"odd_cycle_index\": null"));
        assert_eq!(CycleDecomposition::from_json(&c4, &text).unwrap(), d);
        assert!(CycleDecomposition::from_json(&c4, r#"{"cycles":[["zz"]],"odd_cycle_index":null}"#).is_err());
    }
}
