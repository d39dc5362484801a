use std::fmt;

use crate::{Error, Result};

/// Weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts the parts; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(format!(
                "partition with zero part: {parts:?}"
            )));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(1, 1, …, 1)` with `n` ones.
    pub fn ones(n: usize) -> Self {
        Partition(vec![1; n])
    }

    /// The single-row partition `(n)`, empty for `n = 0`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition(vec![n])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(part, multiplicity)` pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill(n as u32, n as u32, &mut current, &mut out, None);
        out
    }

    /// Partitions of `n` with exactly `k` parts.
    pub fn with_length(n: usize, k: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        if k > n || (k == 0 && n > 0) {
            return out;
        }
        let mut current = Vec::new();
        fill(n as u32, n as u32, &mut current, &mut out, Some(k));
        out
    }
}

fn fill(rest: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>, len: Option<usize>) {
    if let Some(k) = len {
        if current.len() > k {
            return;
        }
    }
    if rest == 0 {
        if len.is_none_or(|k| current.len() == k) {
            out.push(Partition(current.clone()));
        }
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        current.push(p);
        fill(rest - p, p, current, out, len);
        current.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(Partition::all(n).len(), c, "p({n})");
        }
        assert_eq!(Partition::with_length(4, 2).len(), 2);
        assert_eq!(Partition::with_length(3, 4).len(), 0);
        assert_eq!(Partition::with_length(0, 0), vec![Partition::empty()]);
    }

    #[test]
    fn normalizes() {
        let p = Partition::new(vec![1, 3, 1]).unwrap();
        assert_eq!(p.parts(), &[3, 1, 1]);
        assert_eq!(p.multiplicities(), vec![(3, 1), (1, 2)]);
        assert_eq!(p.to_string(), "[3,1,1]");
        assert!(Partition::new(vec![2, 0]).is_err());
    }
}
