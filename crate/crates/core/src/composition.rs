//! Compositions of an integer and the Carlitz (no-equal-adjacent-parts)
//! predicate, with exhaustive enumeration for desk-scale oracles.

use crate::error::{Error, Result};

/// Cap on exhaustive enumeration; `n` produces `2^(n-1)` candidate
/// compositions, so this guards exponential blowup.
pub const DEFAULT_ENUMERATION_CAP: u32 = 25;

/// An ordered tuple of positive integer parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    /// Builds a composition, rejecting zero parts. The empty composition
    /// (of 0) is allowed.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPart);
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The composed total `n`.
    pub fn total(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// True iff no two adjacent parts are equal. Single-part and empty
    /// compositions qualify.
    pub fn is_carlitz(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] != w[1])
    }

    /// Number of distinct part sizes.
    pub fn distinct_sizes(&self) -> usize {
        let mut seen: Vec<u32> = Vec::with_capacity(self.parts.len());
        for &p in &self.parts {
            if !seen.contains(&p) {
                seen.push(p);
            }
        }
        seen.len()
    }
}

impl std::fmt::Display for Composition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All compositions of `n` in lexicographic order of part lists.
pub fn enumerate_compositions(n: u32, cap: u32) -> Result<Vec<Composition>> {
    if n > cap {
        return Err(Error::EnumerationCap { n, cap });
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend(n, None, false, &mut stack, &mut out);
    Ok(out)
}

/// The Carlitz compositions of `n`, each exactly once, in lexicographic
/// order of part lists. Uses [`DEFAULT_ENUMERATION_CAP`].
pub fn enumerate_carlitz(n: u32) -> Result<Vec<Composition>> {
    enumerate_carlitz_capped(n, DEFAULT_ENUMERATION_CAP)
}

/// As [`enumerate_carlitz`] with an explicit cap.
pub fn enumerate_carlitz_capped(n: u32, cap: u32) -> Result<Vec<Composition>> {
    if n > cap {
        return Err(Error::EnumerationCap { n, cap });
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend(n, None, true, &mut stack, &mut out);
    Ok(out)
}

fn descend(
    remaining: u32,
    prev: Option<u32>,
    carlitz_only: bool,
    stack: &mut Vec<u32>,
    out: &mut Vec<Composition>,
) {
    if remaining == 0 {
        out.push(Composition { parts: stack.clone() });
        return;
    }
    for part in 1..=remaining {
        if carlitz_only && prev == Some(part) {
            continue;
        }
        stack.push(part);
        descend(remaining - part, Some(part), carlitz_only, stack, out);
        stack.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn carlitz_predicate() {
        assert!(comp(&[2, 1, 2]).is_carlitz());
        assert!(!comp(&[1, 1]).is_carlitz());
        assert!(comp(&[5]).is_carlitz());
        assert!(comp(&[]).is_carlitz());
    }

    #[test]
    fn rejects_zero_parts() {
        assert!(Composition::new(vec![1, 0, 2]).is_err());
    }

    #[test]
    fn distinct_size_counts() {
        assert_eq!(comp(&[2, 1, 2]).distinct_sizes(), 2);
        assert_eq!(comp(&[5]).distinct_sizes(), 1);
        assert_eq!(comp(&[1, 3, 1]).distinct_sizes(), 2);
        assert_eq!(comp(&[]).distinct_sizes(), 0);
    }

    #[test]
    fn enumerates_the_seven_carlitz_compositions_of_five() {
        let got = enumerate_carlitz(5).unwrap();
        let expected: Vec<Composition> = [
            vec![1, 3, 1],
            vec![1, 4],
            vec![2, 1, 2],
            vec![2, 3],
            vec![3, 2],
            vec![4, 1],
            vec![5],
        ]
        .into_iter()
        .map(|p| Composition::new(p).unwrap())
        .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn enumeration_base_cases() {
        assert_eq!(enumerate_carlitz(1).unwrap(), vec![comp(&[1])]);
        assert_eq!(enumerate_carlitz(0).unwrap(), vec![comp(&[])]);
    }

    #[test]
    fn carlitz_of_four_matches_brute_force() {
        // Independent oracle: filter all 2^(n-1) compositions.
        let brute: Vec<Composition> = enumerate_compositions(4, 25)
            .unwrap()
            .into_iter()
            .filter(Composition::is_carlitz)
            .collect();
        assert_eq!(enumerate_carlitz(4).unwrap(), brute);
        let parts: Vec<&[u32]> = brute.iter().map(|c| c.parts()).collect();
        assert_eq!(parts, vec![&[1, 2, 1][..], &[1, 3], &[3, 1], &[4]]);
    }

    #[test]
    fn enumeration_counts_are_powers_of_two() {
        for n in 1..=12u32 {
            let all = enumerate_compositions(n, 25).unwrap();
            assert_eq!(all.len(), 1usize << (n - 1));
            assert!(all.iter().all(|c| c.total() == u64::from(n)));
            assert!(all.windows(2).all(|w| w[0] < w[1]), "lexicographic order");
        }
    }

    #[test]
    fn cap_is_enforced() {
        match enumerate_carlitz(26) {
            Err(Error::EnumerationCap { n: 26, cap: 25 }) => {}
            other => panic!("expected cap refusal, got {other:?}"),
        }
        assert!(enumerate_carlitz_capped(26, 30).is_ok());
    }
}
