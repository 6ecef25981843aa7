//! `PGL_2(F_5)` inside `S_6` and the outer automorphism it induces.
//!
//! Points of the projective line `{∞, 0, 1, 2, 3, 4}` are indices `0..6`.

use std::sync::OnceLock;

use rustc_hash::{FxHashMap, FxHashSet};
use serde::Serialize;

use crate::symmetric::{all_perms, Perm};

const INF: usize = 0;

fn point(z: Option<u64>) -> usize {
    z.map_or(INF, |v| v as usize + 1)
}

/// The Möbius map `z -> (a z + b) / (c z + d)` over `F_5`.
fn mobius(a: u64, b: u64, c: u64, d: u64) -> Perm {
    let inv5 = |v: u64| (1..5).find(|w| v * w % 5 == 1).expect("nonzero");
    let image = |z: Option<u64>| -> Option<u64> {
        match z {
            None => (c != 0).then(|| a * inv5(c) % 5),
            Some(z) => {
                let den = (c * z + d) % 5;
                (den != 0).then(|| (a * z + b) % 5 * inv5(den) % 5)
            }
        }
    };
    let pts = std::iter::once(None).chain((0..5).map(Some));
    Perm::new(pts.map(|z| point(image(z))).collect()).expect("Möbius maps are bijective")
}

/// `H = PGL_2(F_5)` acting on the projective line, sorted.
pub fn pgl2_f5() -> Vec<Perm> {
    let mut out = FxHashSet::default();
    for a in 0..5 {
        for b in 0..5 {
            for c in 0..5 {
                for d in 0..5 {
                    if (a * d + 25 - b * c) % 5 != 0 {
                        out.insert(mobius(a, b, c, d));
                    }
                }
            }
        }
    }
    let mut v: Vec<Perm> = out.into_iter().collect();
    v.sort();
    v
}

/// `η: z -> z + 1`, the 5-cycle `0 -> 1 -> 2 -> 3 -> 4 -> 0` fixing `∞`.
pub fn eta() -> Perm {
    mobius(1, 1, 0, 1)
}

/// The pairing `{{∞,0},{1,4},{2,3}}`.
pub fn pairing() -> [[usize; 2]; 3] {
    [[0, 1], [2, 5], [3, 4]]
}

/// Where `σ` sends the pairs, or `None` if it does not preserve the
/// pairing.
pub fn rho(sigma: &Perm) -> Option<Perm> {
    let pairs = pairing();
    let find = |a: usize, b: usize| pairs.iter().position(|p| (p[0] == a && p[1] == b) || (p[0] == b && p[1] == a));
    let images: Option<Vec<usize>> = pairs.iter().map(|p| find(sigma.image(p[0]), sigma.image(p[1]))).collect();
    images.map(|v| Perm::new(v).expect("pairs map bijectively"))
}

/// The normalizer `N` of the pairing in `S_6`.
pub fn pairing_normalizer() -> Vec<Perm> {
    all_perms(6).into_iter().filter(|s| rho(s).is_some()).collect()
}

/// `N_0 = N ∩ H`.
pub fn n0() -> Vec<Perm> {
    pgl2_f5().into_iter().filter(|s| rho(s).is_some()).collect()
}

/// An outer automorphism `τ` of `S_6` with `τ(Stab(0)) = H`. Built from the
/// left action of `S_6` on the six cosets `gH` (which gives `τ^{-1}`), then
/// inverted.
pub struct OuterAutomorphism {
    forward: FxHashMap<Perm, Perm>,
    backward: FxHashMap<Perm, Perm>,
    h: Vec<Perm>,
    coset_reps: Vec<Perm>,
}

impl OuterAutomorphism {
    fn build() -> Self {
        let h = pgl2_f5();
        let perms = all_perms(6);
        let mut coset_of: FxHashMap<Perm, usize> = FxHashMap::default();
        let mut coset_reps = Vec::new();
        for g in &perms {
            if coset_of.contains_key(g) {
                continue;
            }
            for x in &h {
                coset_of.insert(g.compose(x), coset_reps.len());
            }
            coset_reps.push(g.clone());
        }
        let mut forward = FxHashMap::default();
        let mut backward = FxHashMap::default();
        for s in &perms {
            let images = coset_reps.iter().map(|g| coset_of[&s.compose(g)]).collect();
            let theta = Perm::new(images).expect("coset action is a permutation");
            forward.insert(theta.clone(), s.clone());
            backward.insert(s.clone(), theta);
        }
        OuterAutomorphism { forward, backward, h, coset_reps }
    }

    /// The frozen instance.
    pub fn get() -> &'static OuterAutomorphism {
        static TAU: OnceLock<OuterAutomorphism> = OnceLock::new();
        TAU.get_or_init(Self::build)
    }

    pub fn apply(&self, sigma: &Perm) -> Perm {
        self.forward[sigma].clone()
    }

    pub fn apply_inverse(&self, sigma: &Perm) -> Perm {
        self.backward[sigma].clone()
    }

    /// `τ((1 k))` for `k = 2..6`, i.e. images of the transpositions `(0 k)`.
    pub fn transposition_images(&self) -> Vec<Perm> {
        (1..6).map(|k| self.apply(&Perm::transposition(6, 0, k))).collect()
    }

    pub fn h(&self) -> &[Perm] {
        &self.h
    }

    pub fn coset_representatives(&self) -> &[Perm] {
        &self.coset_reps
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupFacts {
    pub h_order: usize,
    pub n_order: usize,
    pub n0_order: usize,
    pub rho_n0_order: usize,
    pub kernel_rho_n0_order: usize,
    pub n0_is_s4: bool,
    pub eta_coset_decomposition: bool,
    pub tau_transposition_images: Vec<String>,
    pub tau_images_are_triple_transpositions: bool,
    pub tau_is_homomorphism: bool,
    pub tau_stabilizer_image_is_h: bool,
    pub tau_squared_inner: bool,
}

impl GroupFacts {
    pub fn passed(&self) -> bool {
        self.h_order == 120
            && self.n_order == 48
            && self.n0_order == 24
            && self.rho_n0_order == 6
            && self.kernel_rho_n0_order == 4
            && self.n0_is_s4
            && self.eta_coset_decomposition
            && self.tau_images_are_triple_transpositions
            && self.tau_is_homomorphism
            && self.tau_stabilizer_image_is_h
            && self.tau_squared_inner
    }
}

/// A group of order 24 is `S_4` iff it has exactly nine involutions and
/// eight elements of order three.
fn looks_like_s4(g: &[Perm]) -> bool {
    let order = |p: &Perm| (1..=24).find(|&k| p.pow(k).is_identity()).unwrap_or(0);
    let count = |k| g.iter().filter(|p| order(p) == k).count();
    g.len() == 24 && count(2) == 9 && count(3) == 8 && count(4) == 6
}

/// Checks the subgroup lemma and the properties of `τ`. The homomorphism
/// and `τ²`-inner checks cover every element of `S_6`.
pub fn group_facts() -> GroupFacts {
    let tau = OuterAutomorphism::get();
    let h: FxHashSet<Perm> = tau.h().iter().cloned().collect();
    let n = pairing_normalizer();
    let n0 = n0();
    let rho_img: FxHashSet<Perm> = n0.iter().filter_map(rho).collect();
    let kernel = n0.iter().filter(|s| rho(s).is_some_and(|r| r.is_identity())).count();
    let e = eta();
    let mut union: FxHashSet<Perm> = FxHashSet::default();
    for i in 0..5 {
        let ei = e.pow(i);
        union.extend(n0.iter().map(|x| ei.compose(x)));
    }
    let images = tau.transposition_images();
    let perms = all_perms(6);
    let gens: Vec<Perm> = (0..5).map(|i| Perm::transposition(6, i, i + 1)).collect();
    let hom =
        perms.iter().all(|a| gens.iter().all(|b| tau.apply(&a.compose(b)) == tau.apply(a).compose(&tau.apply(b))));
    let stab_image: FxHashSet<Perm> = perms.iter().filter(|s| s.image(0) == 0).map(|s| tau.apply(s)).collect();
    let squared = perms.iter().all(|s| tau.apply(&tau.apply(s)).cycle_type() == s.cycle_type());
    GroupFacts {
        h_order: h.len(),
        n_order: n.len(),
        n0_order: n0.len(),
        rho_n0_order: rho_img.len(),
        kernel_rho_n0_order: kernel,
        n0_is_s4: looks_like_s4(&n0),
        eta_coset_decomposition: union == h,
        tau_transposition_images: images.iter().map(format_points).collect(),
        tau_images_are_triple_transpositions: images.iter().all(|p| p.cycle_type() == vec![2, 2, 2]),
        tau_is_homomorphism: hom,
        tau_stabilizer_image_is_h: stab_image == h,
        tau_squared_inner: squared,
    }
}

/// Cycle notation with projective-line labels.
pub fn format_points(p: &Perm) -> String {
    const LABELS: [&str; 6] = ["∞", "0", "1", "2", "3", "4"];
    let cycles = p.cycles();
    if cycles.is_empty() {
        return "()".into();
    }
    cycles.iter().map(|c| format!("({})", c.iter().map(|&i| LABELS[i]).collect::<Vec<_>>().join(" "))).collect()
}
