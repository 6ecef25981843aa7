use num_bigint::BigInt;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    group_facts, hermite_covariant, hermite_psi1, hermite_psi_tilde, joubert_covariant, joubert_h, joubert_orbit_sum,
    joubert_psi, joubert_psi1, omega1, pairing_normalizer, rho, t_substitution, unit_coefficients, Covariant,
    OuterAutomorphism, SuiteReport,
};
use crate::gf::PrimeField;
use crate::polyring::MultiPoly;
use crate::ring::{Integers, Ring};
use crate::symmetric::{
    apply_permutation, check_condition_r, check_condition_t, elem_sym_all, elementary_symmetric, laurent_reflect,
    vandermonde_delta,
};

/// Prime used for pointwise checks of the degree-25 and degree-18 forms.
const CHECK_PRIME: u64 = 2_147_483_647;

/// Leading term of `a - b`, or `None` when equal.
fn first_difference(a: &MultiPoly<Integers>, b: &MultiPoly<Integers>) -> Option<String> {
    let d = a - b;
    d.leading_term().ok().map(|(m, c)| format!("{c} * x^{m:?}"))
}

fn zero_check(report: &mut SuiteReport, name: &str, p: &MultiPoly<Integers>) {
    let zero = MultiPoly::zero(&Integers, p.nvars());
    match first_difference(p, &zero) {
        None => report.push(name, true, "0".into()),
        Some(t) => report.push(name, false, format!("first nonzero term {t}")),
    }
}

fn reduce(cov: &Covariant<Integers>, p: u64) -> Covariant<PrimeField> {
    let f = PrimeField::new(p).expect("prime");
    cov.map_ring(&f, |c| f.from_int(c))
}

/// `e_k` of the component values and `Δ` at a random point mod a prime.
fn pointwise(cov: &Covariant<PrimeField>, ks: &[usize], rng: &mut ChaCha8Rng) -> (Vec<u64>, u64) {
    let f = *cov.components[0].ring();
    let pt: Vec<u64> = (0..cov.n).map(|_| rng.gen_range(0..f.p())).collect();
    let vals: Vec<u64> = cov.components.iter().map(|c| c.eval(&pt).expect("arity")).collect();
    let mut e = vec![1u64];
    e.extend(std::iter::repeat_n(0, cov.n));
    for v in vals {
        for j in (1..=cov.n).rev() {
            e[j] = f.add(&e[j], &f.mul(&e[j - 1], &v));
        }
    }
    let delta = vandermonde_delta(&f, cov.n).eval(&pt).expect("arity");
    (ks.iter().map(|&k| e[k]).collect(), delta)
}

/// Identities of the quintic covariant: `e_1(ψ̃) = e_3(ψ̃) = 0` over the
/// integers, the specialization at `(t^4, t^3, t^2, t, 1)`, degrees and
/// faithfulness.
pub fn verify_hermite() -> SuiteReport {
    let mut r = SuiteReport::new("hermite");
    let psi1 = hermite_psi1();
    let lt = psi1.leading_term().expect("nonzero");
    r.push("psi1 leading term -x1^6*x2^3", lt == (vec![6, 3, 0, 0, 0], BigInt::from(-1)), format!("{lt:?}"));
    let omega = omega1(&Integers, 5);
    let delta = vandermonde_delta(&Integers, 5);
    log::info!("hermite: building the covariant");
    let phi = hermite_covariant();
    let phi1 = &phi.components[0];
    let degs =
        (psi1.homogeneous_degree(), omega.homogeneous_degree(), delta.homogeneous_degree(), phi1.homogeneous_degree());
    r.push(
        "degrees psi1=9 omega1=6 delta=10 phi1=25",
        degs == (Some(9), Some(6), Some(10), Some(25)),
        format!("{degs:?}"),
    );
    r.push("phi1 per-variable degree 10", phi1.degrees() == vec![10; 5], format!("{:?}", phi1.degrees()));
    let lc = phi1.leading_term().expect("nonzero").1;
    r.push("phi1 leading coefficient ±1", lc == BigInt::from(1) || lc == BigInt::from(-1), lc.to_string());
    r.push("phi equivariant", phi.equivariance_violation().is_none(), "adjacent transpositions".into());

    let pt = hermite_psi_tilde();
    log::info!("hermite: elementary symmetric functions of the degree-15 components");
    let e = elem_sym_all(&pt.components, 3).expect("five components");
    zero_check(&mut r, "e1(psi~) = 0", &e[1]);
    r.push("e2(psi~) != 0", !e[2].is_zero(), format!("{} terms", e[2].len()));
    zero_check(&mut r, "e3(psi~) = 0", &e[3]);
    let d3 = delta.pow(3);
    zero_check(&mut r, "s1(phi) = delta * e1(psi~) = 0", &(&delta * &e[1]));
    zero_check(&mut r, "s3(phi) = delta^3 * e3(psi~) = 0", &(&d3 * &e[3]));

    let ts = t_substitution(&pt);
    r.push("psi~3(t^4,t^3,t^2,t,1) = 0", ts.psi_tilde3_vanishes, String::new());
    r.push(
        "psi~1 psi~2 psi~4 psi~5 leading term ±t^188",
        ts.passed(),
        format!("{}*t^{}", ts.leading_coefficient, ts.product_degree),
    );

    let f11 = PrimeField::new(11).expect("prime");
    let zeta_pt: Vec<u64> = (0..5).map(|i| f11.pow(&3, i)).collect();
    let v = psi1.map_ring(&f11, |c| f11.from_int(c)).eval(&zeta_pt).expect("arity");
    r.push("psi1(1,z,z^2,z^3,z^4) = 0 in GF(11), z = 3", v == 0, v.to_string());

    let mut distinct = vec![("Z".to_string(), phi.pairwise_distinct())];
    for p in [2, 3, 5, 7, 11] {
        distinct.push((format!("GF({p})"), reduce(&phi, p).pairwise_distinct()));
    }
    r.push("phi components pairwise distinct", distinct.iter().all(|d| d.1), format!("{distinct:?}"));

    let phi_p = reduce(&phi, CHECK_PRIME);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let ok = (0..20).all(|_| {
        let (e, _) = pointwise(&phi_p, &[1, 3], &mut rng);
        e == [0, 0]
    });
    r.push("s1(phi) = s3(phi) = 0 at 20 random points mod 2^31-1", ok, String::new());
    r
}

/// `s_5(ψ) = c Δ`, returning `c`.
fn delta_multiple(e5: &MultiPoly<Integers>, delta: &MultiPoly<Integers>) -> Option<BigInt> {
    let q = e5.divide_exact(delta).ok()?;
    q.is_constant().then(|| q.constant_term())
}

/// Identities of the sextic covariant: `e_1(ψ) = e_3(ψ) = 0`, `e_5(ψ) = -2^5 Δ`,
/// the coefficient pattern of `ψ_1`, twisted equivariance and faithfulness.
pub fn verify_joubert() -> SuiteReport {
    let mut r = SuiteReport::new("joubert");
    let h = joubert_h();
    let h_ok = pairing_normalizer().iter().all(|s| {
        let img = apply_permutation(&h, s).expect("arity");
        if rho(s).expect("in N").sign() == 1 {
            img == h
        } else {
            img == h.neg()
        }
    });
    r.push("h semi-invariant under N with sign of rho", h_ok, String::new());
    let sum = joubert_orbit_sum();
    let three = BigInt::from(3);
    let all3 = sum.terms().all(|(_, c)| *c == three || *c == -three.clone());
    r.push("eta-orbit sum of h has all coefficients ±3", all3, format!("{} terms", sum.len()));
    let psi1 = match joubert_psi1() {
        Ok(p) => p,
        Err(e) => {
            r.push("psi1 construction", false, e.to_string());
            return r;
        }
    };
    r.push(
        "psi1 has 20 terms with coefficients ±1",
        psi1.len() == 20 && unit_coefficients(&psi1),
        psi1.len().to_string(),
    );
    let f2 = PrimeField::new(2).expect("prime");
    let e3_mod2 = elementary_symmetric(&f2, 6, 3).expect("k <= n");
    r.push("psi1 = e3 mod 2", psi1.map_ring(&f2, |c| f2.from_int(c)) == e3_mod2, String::new());

    let tau = OuterAutomorphism::get();
    let semi = tau.h().iter().all(|s| {
        let img = apply_permutation(&psi1, s).expect("arity");
        if s.sign() == 1 {
            img == psi1
        } else {
            img == psi1.neg()
        }
    });
    r.push("psi1 semi-invariant under H", semi, "120 elements".into());
    let delta = vandermonde_delta(&Integers, 6);
    let phi = joubert_covariant();
    let degs = (psi1.homogeneous_degree(), delta.homogeneous_degree(), phi.components[0].homogeneous_degree());
    r.push("degrees psi1=3 delta=15 phi1=18", degs == (Some(3), Some(15), Some(18)), format!("{degs:?}"));
    r.push("phi equivariant with tau twist", phi.equivariance_violation().is_none(), String::new());

    let psi = joubert_psi();
    let e = elem_sym_all(&psi.components, 6).expect("six components");
    zero_check(&mut r, "e1(psi) = 0", &e[1]);
    zero_check(&mut r, "e3(psi) = 0", &e[3]);
    let target = delta.scale(&BigInt::from(-32));
    match first_difference(&e[5], &target) {
        None => r.push("e5(psi) = -2^5 * delta", true, String::new()),
        Some(t) => r.push("e5(psi) = -2^5 * delta", false, format!("first differing term {t}")),
    }
    let c = delta_multiple(&e[5], &delta);
    let detail = match &c {
        Some(c) => {
            let s = c.magnitude().bits() - 1;
            let sign = if c.sign() == num_bigint::Sign::Minus { "-" } else { "+" };
            format!("e5(psi) = {c} * delta = {sign}2^{s} * delta, so s5(phi) = {sign}2^{s} * delta^6")
        }
        None => "not a constant multiple of delta".into(),
    };
    let pow2 = c.as_ref().is_some_and(|c| {
        let m = c.magnitude();
        m.count_ones() == 1
    });
    r.push("e5(psi) = ±2^s * delta", pow2, detail);
    r.push("e2, e4, e6 of psi nonzero", !e[2].is_zero() && !e[4].is_zero() && !e[6].is_zero(), String::new());

    let mut distinct = vec![("Z".to_string(), psi.pairwise_distinct())];
    for p in [3, 5, 7, 11] {
        distinct.push((format!("GF({p})"), reduce(&psi, p).pairwise_distinct()));
    }
    r.push("psi components distinct over Z and odd p", distinct.iter().all(|d| d.1), format!("{distinct:?}"));
    let m2 = reduce(&psi, 2);
    let coincide = m2.components.iter().all(|c| *c == e3_mod2);
    r.push("psi components all equal e3 mod 2", coincide, String::new());

    let phi_p = reduce(&phi, CHECK_PRIME);
    let f = PrimeField::new(CHECK_PRIME).expect("prime");
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let minus32 = f.from_i64(-32);
    let ok = (0..20).all(|_| {
        let (e, d) = pointwise(&phi_p, &[1, 3, 5], &mut rng);
        e[0] == 0 && e[1] == 0 && e[2] == f.mul(&minus32, &f.pow(&d, 6))
    });
    r.push("s1 = s3 = 0 and s5(phi) = -32 delta^6 at 20 random points mod 2^31-1", ok, String::new());
    r
}

/// The conditions (T) and (R) for the discriminant, `ψ_1` and `φ_1`.
pub fn verify_conditions() -> SuiteReport {
    let mut r = SuiteReport::new("conditions-tr");
    let d5 = vandermonde_delta(&Integers, 5);
    let d2 = &d5 * &d5;
    r.push("delta^2 (n=5) satisfies T", check_condition_t(&d2).unwrap_or(false), String::new());
    r.push("delta^2 (n=5) satisfies R with d=8", check_condition_r(&d2, 8).unwrap_or(false), String::new());
    let psi1 = hermite_psi1();
    r.push("psi1 satisfies T", check_condition_t(&psi1).unwrap_or(false), String::new());
    let refl = laurent_reflect(&psi1, &[6, 3, 3, 3, 3]).map(|p| p == psi1.neg()).unwrap_or(false);
    r.push("x1^3 (x1...x5)^3 psi1(1/x) = -psi1", refl, String::new());
    let omega = omega1(&Integers, 5);
    let t_factors = [&psi1, &omega, &d5].iter().all(|p| check_condition_t(p).unwrap_or(false));
    r.push("phi1 satisfies T (each factor does)", t_factors, String::new());
    let phi1 = &(&psi1 * &omega) * &d5;
    r.push("phi1 satisfies R with d=10", check_condition_r(&phi1, 10).unwrap_or(false), String::new());
    r
}

/// The subgroup lemma and the outer automorphism.
pub fn verify_group_facts() -> SuiteReport {
    let mut r = SuiteReport::new("group-facts");
    let f = group_facts();
    r.push("|H| = 120", f.h_order == 120, f.h_order.to_string());
    r.push("|N| = 48", f.n_order == 48, f.n_order.to_string());
    r.push("|N0| = 24 and N0 ~ S4", f.n0_order == 24 && f.n0_is_s4, f.n0_order.to_string());
    r.push(
        "rho(N0) = S3, |ker| = 4",
        f.rho_n0_order == 6 && f.kernel_rho_n0_order == 4,
        format!("{} / {}", f.rho_n0_order, f.kernel_rho_n0_order),
    );
    r.push("H = N0 ∪ ηN0 ∪ ... ∪ η^4N0", f.eta_coset_decomposition, String::new());
    r.push(
        "tau((1k)) are triple transpositions",
        f.tau_images_are_triple_transpositions,
        f.tau_transposition_images.join(" "),
    );
    r.push("tau is a homomorphism", f.tau_is_homomorphism, String::new());
    r.push("tau(S5) = H", f.tau_stabilizer_image_is_h, String::new());
    r.push("tau∘tau preserves cycle types", f.tau_squared_inner, String::new());
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn joubert_suite_passes() {
        let r = verify_joubert();
        assert!(r.passed(), "{r:#?}");
    }

    #[test]
    fn group_suite_passes() {
        assert!(verify_group_facts().passed());
    }

    #[test]
    fn conditions_suite_passes() {
        let r = verify_conditions();
        assert!(r.passed(), "{r:#?}");
    }
}
