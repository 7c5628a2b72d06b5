use std::cmp::Ordering;
use std::fmt;

/// Exponent vector `α` of a monomial `x^α`.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// of `x1`, then `x2`, and so on.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn zero(d: usize) -> Self {
        Self(vec![0; d])
    }

    /// `x_{j+1}`.
    pub fn unit(d: usize, j: usize) -> Self {
        let mut e = vec![0; d];
        e[j] = 1;
        Self(e)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise `self ≤ other`.
    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn concat(&self, other: &Self) -> Self {
        Self(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn split_at(&self, k: usize) -> (Self, Self) {
        (Self(self.0[..k].to_vec()), Self(self.0[k..].to_vec()))
    }

    /// All `β` with `β ≤ bound` componentwise, in graded-lex order.
    pub fn below(bound: &Self) -> Vec<Self> {
        let mut out = vec![Vec::new()];
        for &b in &bound.0 {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..=b).map(move |e| {
                        let mut p = prefix.clone();
                        p.push(e);
                        p
                    })
                })
                .collect();
        }
        let mut v: Vec<Self> = out.into_iter().map(Self).collect();
        v.sort();
        v
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `x1^2*x3`; the empty monomial prints as `1`.
impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors = self.factors(&|j| format!("x{}", j + 1));
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

impl MultiIndex {
    pub(crate) fn factors(&self, name: &dyn Fn(usize) -> String) -> Vec<String> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(j, &e)| {
                if e == 1 {
                    name(j)
                } else {
                    format!("{}^{e}", name(j))
                }
            })
            .collect()
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let m = |v: &[u32]| MultiIndex::new(v.to_vec());
        let mut v = vec![m(&[2, 0]), m(&[0, 0]), m(&[1, 1]), m(&[0, 1]), m(&[1, 0]), m(&[0, 2])];
        v.sort();
        assert_eq!(v, vec![m(&[0, 0]), m(&[0, 1]), m(&[1, 0]), m(&[0, 2]), m(&[1, 1]), m(&[2, 0])]);
    }

    #[test]
    fn below_enumerates_box() {
        let b = MultiIndex::new(vec![2, 1]);
        assert_eq!(MultiIndex::below(&b).len(), 6);
        assert_eq!(b.to_string(), "x1^2*x2");
        assert_eq!(MultiIndex::zero(3).to_string(), "1");
    }
}
