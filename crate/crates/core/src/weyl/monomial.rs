use std::cmp::Ordering;
use std::fmt;

/// A PBW basis monomial `x^alpha d^beta` in `n` variable pairs.
///
/// Ordered graded-lexicographically: first by Bernstein degree, then
/// lexicographically on `(alpha, beta)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    // alpha followed by beta
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(alpha: &[u32], beta: &[u32]) -> Self {
        assert_eq!(alpha.len(), beta.len(), "alpha and beta must have the same length");
        let mut exps = Vec::with_capacity(2 * alpha.len());
        exps.extend_from_slice(alpha);
        exps.extend_from_slice(beta);
        Self { exps }
    }

    pub fn one(n: usize) -> Self {
        Self { exps: vec![0; 2 * n] }
    }

    pub(crate) fn from_exps(exps: Vec<u32>) -> Self {
        debug_assert!(exps.len() % 2 == 0);
        Self { exps }
    }

    pub fn n(&self) -> usize {
        self.exps.len() / 2
    }

    pub fn alpha(&self) -> &[u32] {
        &self.exps[..self.n()]
    }

    pub fn beta(&self) -> &[u32] {
        &self.exps[self.n()..]
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    /// Bernstein degree `|alpha| + |beta|`.
    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Text form `x1^2*d1`, or empty for the unit monomial.
    pub fn to_text(&self) -> String {
        self.to_text_with("x", "d")
    }

    /// Like [`Self::to_text`] with other names for the two variable blocks.
    pub fn to_text_with(&self, first: &str, second: &str) -> String {
        let n = self.n();
        let mut parts = Vec::new();
        for (name, exps) in [(first, self.alpha()), (second, self.beta())] {
            for (i, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(format!("{name}{}", i + 1)),
                    _ => parts.push(format!("{name}{}^{e}", i + 1)),
                }
            }
        }
        debug_assert!(n == 0 || parts.len() <= 2 * n);
        parts.join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{:?} d^{:?}", self.alpha(), self.beta())
    }
}
