use std::fmt;

use serde::{Deserialize, Serialize};

use super::SymError;
use crate::polyring::MultiPoly;
use crate::ring::Ring;

/// A permutation of `{0, ..., n-1}`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self, SymError> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(SymError::NotBijection(images));
            }
        }
        Ok(Perm { images })
    }

    pub fn identity(n: usize) -> Self {
        Perm { images: (0..n).collect() }
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i, j);
        p
    }

    /// The cycle `c[0] -> c[1] -> ... -> c[0]`.
    pub fn cycle(n: usize, c: &[usize]) -> Self {
        let mut p = Self::identity(n);
        for (k, &i) in c.iter().enumerate() {
            p.images[i] = c[(k + 1) % c.len()];
        }
        p
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.n()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Perm { images: inv }
    }

    pub fn pow(&self, k: usize) -> Perm {
        (0..k).fold(Self::identity(self.n()), |acc, _| self.compose(&acc))
    }

    /// Disjoint cycles of length at least two, each starting at its
    /// smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut c = vec![start];
            seen[start] = true;
            let mut i = self.images[start];
            while i != start {
                seen[i] = true;
                c.push(i);
                i = self.images[i];
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }

    /// Cycle lengths in decreasing order, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let moved: usize = self.cycles().iter().map(Vec::len).sum();
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.extend(std::iter::repeat_n(1, self.n() - moved));
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn sign(&self) -> i64 {
        if self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Cycle notation with 1-based points, `()` for the identity.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

/// `(σ·p)(x_1, ..., x_n) = p(x_σ(1), ..., x_σ(n))`. This is a left action:
/// `σ·(τ·p) = (στ)·p`.
pub fn apply_permutation<R: Ring>(p: &MultiPoly<R>, sigma: &Perm) -> Result<MultiPoly<R>, SymError> {
    if sigma.n() != p.nvars() {
        return Err(SymError::LengthMismatch { expected: p.nvars(), found: sigma.n() });
    }
    Ok(p.remap_vars(&sigma.images, p.nvars())?)
}

/// The transpositions `(i i+1)`.
pub fn adjacent_transpositions(n: usize) -> Vec<Perm> {
    (0..n.saturating_sub(1)).map(|i| Perm::transposition(n, i, i + 1)).collect()
}

/// All permutations of `n` points in lexicographic order of image lists.
pub fn all_perms(n: usize) -> Vec<Perm> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
        if prefix.len() == used.len() {
            out.push(Perm { images: prefix.clone() });
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}
