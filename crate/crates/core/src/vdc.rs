//! Explicit van der Corput derivative-test constants.
//!
//! The order-3 test (α, β), the order-3 boundary constants (A₃, B₃), the
//! recursive general-order constants (A_k, B_k, δ_k), and the Dirichlet-sum
//! constants (C_k, D_k) used to bound |Σ n^{-1-it}| over short blocks.

use rug::{Complete, Integer};

use crate::rigor::{log_factorial, Interval};
use crate::{Error, Result};

/// K = 2^(k-1) as an exact integer.
pub fn big_k(k: u32) -> Integer {
    Integer::from(1) << (k - 1)
}

/// Constants of the windowed order-3 test: |Σ e^{2πif}|² ≤ (LW^{-1/3}+η)(αL+βW^{2/3}).
#[derive(Debug, Clone)]
pub struct Order3Constants {
    pub alpha: Interval,
    pub beta: Interval,
    pub w: Interval,
    pub lambda: Interval,
    pub eta: Interval,
}

/// α = 1/η + (32/(15√π))√(η + W^{-1/3}) + 2λη/W^{1/3} + 2λ/W^{2/3},
/// β = (64/(3√π))/√η + 4/W^{1/3}.
pub fn corput3_alpha_beta(w: &Interval, lambda: &Interval, eta: &Interval) -> Result<Order3Constants> {
    if !w.is_positive() {
        return Err(Error::domain("corput3_alpha_beta", "W must be positive"));
    }
    if lambda.lo_f64() < 1.0 {
        return Err(Error::domain("corput3_alpha_beta", "lambda must be >= 1"));
    }
    if !eta.is_positive() {
        return Err(Error::domain("corput3_alpha_beta", "eta must be positive"));
    }
    let third = Interval::ratio(1, 3);
    let w13 = w.pow(&third)?;
    let w23 = w.pow(&Interval::ratio(2, 3))?;
    let sqrt_pi = Interval::pi().sqrt()?;
    let c32_15 = Interval::from_u64(32).div(&Interval::from_u64(15).mul(&sqrt_pi))?;
    let c64_3 = Interval::from_u64(64).div(&Interval::from_u64(3).mul(&sqrt_pi))?;

    let alpha = eta
        .recip()?
        .add(&c32_15.mul(&eta.add(&w13.recip()?).sqrt()?))
        .add(&lambda.scale2(1).mul(eta).div(&w13)?)
        .add(&lambda.scale2(1).div(&w23)?);
    let beta = c64_3.div(&eta.sqrt()?)?.add(&Interval::from_u64(4).div(&w13)?);
    Ok(Order3Constants {
        alpha,
        beta,
        w: w.clone(),
        lambda: lambda.clone(),
        eta: eta.clone(),
    })
}

/// Constants of the unwindowed k-th derivative test:
/// |Σ e^{2πif}| ≤ A_k ω^{2/K} N λ^{1/(2K-2)} + B_k N^{1-2/K} λ^{-1/(2K-2)}.
#[derive(Debug, Clone)]
pub struct KthConstants {
    pub k: u32,
    pub a_k: Interval,
    pub b_k: Interval,
    pub delta_k: Interval,
    pub eta3: Interval,
    pub omega: Interval,
}

/// δ₃(η₃) = √(1/2 + (1/2)√(1 + (3/8)√π η₃^{3/2})) — the order-3 window constant.
fn delta3_boundary(eta3: &Interval) -> Result<Interval> {
    let half = Interval::ratio(1, 2);
    let inner = Interval::from_u64(1).add(
        &Interval::ratio(3, 8)
            .mul(&Interval::pi().sqrt()?)
            .mul(&eta3.pow(&Interval::ratio(3, 2))?),
    );
    half.add(&half.mul(&inner.sqrt()?)).sqrt()
}

/// δ_k(η₃) = √(1 + (2/2337^{1-2/K}) ((9π/1024) η₃)^{1/K}), K = 2^{k-1}.
pub fn delta_k(eta3: &Interval, k: u32) -> Result<Interval> {
    let kk = Interval::from_integer(&big_k(k));
    let two_over_k = Interval::from_u64(2).div(&kk)?;
    let one_over_k = kk.recip()?;
    let p2337 = Interval::from_u64(2337).pow(&Interval::from_u64(1).sub(&two_over_k))?;
    let base = Interval::ratio(9, 1024).mul(&Interval::pi()).mul(eta3);
    let term = Interval::from_u64(2)
        .div(&p2337)?
        .mul(&base.pow(&one_over_k)?);
    Interval::from_u64(1).add(&term).sqrt()
}

/// Order-3 boundary constants A₃(η₃, ω), B₃(η₃) of the recursive chain.
pub fn a3_b3(eta3: &Interval, omega: &Interval) -> Result<KthConstants> {
    if !eta3.is_positive() {
        return Err(Error::domain("a3_b3", "eta3 must be positive"));
    }
    if omega.lo_f64() <= 1.0 {
        return Err(Error::domain("a3_b3", "omega must exceed 1"));
    }
    let third = Interval::ratio(1, 3);
    let sqrt_pi = Interval::pi().sqrt()?;
    let c32_15 = Interval::from_u64(32).div(&Interval::from_u64(15).mul(&sqrt_pi))?;

    // λ₀ = (1/η₃ + 32 η₃^{1/2} ω / (15√π))^{-3}
    let lam0 = eta3
        .recip()?
        .add(&c32_15.mul(&eta3.sqrt()?).mul(omega))
        .powi(-3)?;
    let lam0_13 = lam0.pow(&third)?;
    let d3 = delta3_boundary(eta3)?;

    let inner = eta3
        .mul(omega)
        .recip()?
        .add(&c32_15.mul(&eta3.add(&lam0_13).sqrt()?))
        .add(&third.mul(&eta3.add(&lam0_13)).mul(&lam0_13));
    let a3 = inner.sqrt()?.mul(&d3);

    let b3 = Interval::from_u64(32)
        .sqrt()?
        .div(
            &Interval::from_u64(3)
                .sqrt()?
                .mul(&Interval::pi().pow(&Interval::ratio(1, 4))?)
                .mul(&eta3.pow(&Interval::ratio(1, 4))?),
        )?
        .mul(&d3);

    Ok(KthConstants {
        k: 3,
        a_k: a3,
        b_k: b3,
        delta_k: delta_k(eta3, 3)?,
        eta3: eta3.clone(),
        omega: omega.clone(),
    })
}

/// A_k, B_k for k ≥ 3 via the recursion
/// A_{k+1} = δ_k (ω^{-1/K} + 2^{19/12}(K-1)/√((2K-1)(4K-3)) · A_k^{1/2}),
/// B_{k+1} = δ_k · 2^{3/2}(K-1)/√((2K-3)(4K-5)) · B_k^{1/2},
/// where at each step K = 2^{k-1} for the source index k.
pub fn ak_bk(eta3: &Interval, omega: &Interval, k: u32) -> Result<KthConstants> {
    if k < 3 {
        return Err(Error::domain("ak_bk", "k must be >= 3"));
    }
    let mut cur = a3_b3(eta3, omega)?;
    for kk in 3..k {
        cur = step_ak_bk(&cur, eta3, omega, kk)?;
    }
    Ok(cur)
}

/// Coefficient 2^{19/12}(K-1)/√((2K-1)(4K-3)) of the A-recursion at source index k.
pub fn mu_coeff(k: u32) -> Result<Interval> {
    let kk = big_k(k);
    let km1 = Interval::from_integer(&(&kk - 1u32).complete());
    let q = Interval::from_integer(&((&kk * 2u32).complete() - 1u32))
        .mul(&Interval::from_integer(&((&kk * 4u32).complete() - 3u32)));
    Interval::ratio(19, 12).exp2().mul(&km1).div(&q.sqrt()?)
}

/// Coefficient 2^{3/2}(K-1)/√((2K-3)(4K-5)) of the B-recursion at source index k.
pub fn nu_coeff(k: u32) -> Result<Interval> {
    let kk = big_k(k);
    let km1 = Interval::from_integer(&(&kk - 1u32).complete());
    let q = Interval::from_integer(&((&kk * 2u32).complete() - 3u32))
        .mul(&Interval::from_integer(&((&kk * 4u32).complete() - 5u32)));
    Interval::ratio(3, 2).exp2().mul(&km1).div(&q.sqrt()?)
}

fn step_ak_bk(cur: &KthConstants, eta3: &Interval, omega: &Interval, k: u32) -> Result<KthConstants> {
    let kk = Interval::from_integer(&big_k(k));
    let dk = delta_k(eta3, k)?;
    let om_pow = omega.pow(&kk.recip()?.neg())?;
    let a_next = dk.mul(&om_pow.add(&mu_coeff(k)?.mul(&cur.a_k.sqrt()?)));
    let b_next = dk.mul(&nu_coeff(k)?).mul(&cur.b_k.sqrt()?);
    Ok(KthConstants {
        k: k + 1,
        a_k: a_next,
        b_k: b_next,
        delta_k: delta_k(eta3, k + 1)?,
        eta3: eta3.clone(),
        omega: omega.clone(),
    })
}

/// Dirichlet-block constants C_k(η₃, h), D_k(η₃, h) with the factorial powers
/// computed in the log domain so that k far beyond 170 stays finite.
#[derive(Debug, Clone)]
pub struct DirichletConstants {
    pub k: u32,
    pub c_k: Interval,
    pub d_k: Interval,
    pub h: Interval,
}

/// Exponent k/(2K-2) - 2/K of the block length in the D-term (nonnegative for k ≥ 3).
pub fn d_exponent(k: u32) -> rug::Rational {
    let kk = big_k(k);
    let a = rug::Rational::from((Integer::from(k), (&kk * 2u32).complete() - 2u32));
    let b = rug::Rational::from((Integer::from(2), kk));
    a - b
}

/// ((k-1)!/2π)^{1/(2K-2)} via exp((log (k-1)! − log 2π)/(2K-2)).
fn factorial_power(k: u32, invert: bool) -> Result<Interval> {
    let two_k_minus_2 = Interval::from_integer(&((big_k(k) * 2u32) - 2u32));
    let lf = log_factorial(u64::from(k) - 1)?;
    let log_ratio = lf.sub(&Interval::two_pi().ln()?);
    let e = log_ratio.div(&two_k_minus_2)?;
    Ok(if invert { e.neg().exp() } else { e.exp() })
}

pub fn ck_dk(eta3: &Interval, h: &Interval, k: u32) -> Result<DirichletConstants> {
    if k < 3 {
        return Err(Error::domain("ck_dk", "k must be >= 3"));
    }
    if h.lo_f64() <= 1.0 {
        return Err(Error::domain("ck_dk", "h must exceed 1"));
    }
    if !eta3.is_positive() {
        return Err(Error::domain("ck_dk", "eta3 must be positive"));
    }
    let kk = big_k(k);
    let omega = h.powi(i64::from(k))?;
    let chain = ak_bk(eta3, &omega, k)?;
    let h_minus_1 = h.sub(&Interval::from_u64(1));

    // C_k = A_k(η₃, h^k) h^{2k/K - k/(2K-2)} (h-1) ((k-1)!/2π)^{1/(2K-2)}
    let c_exp = rug::Rational::from((Integer::from(2 * k), kk.clone()))
        - rug::Rational::from((Integer::from(k), (&kk * 2u32).complete() - 2u32));
    let c_k = chain
        .a_k
        .mul(&h.pow(&Interval::from_rational(&c_exp))?)
        .mul(&h_minus_1)
        .mul(&factorial_power(k, false)?);

    // D_k = B_k(η₃) h^{k/(2K-2)} (h-1)^{1-2/K} (2π/(k-1)!)^{1/(2K-2)}
    let d_exp = rug::Rational::from((Integer::from(k), (&kk * 2u32).complete() - 2u32));
    let one_minus_2k = rug::Rational::from((1, 1)) - rug::Rational::from((Integer::from(2), kk));
    let d_k = chain
        .b_k
        .mul(&h.pow(&Interval::from_rational(&d_exp))?)
        .mul(&h_minus_1.pow(&Interval::from_rational(&one_minus_2k))?)
        .mul(&factorial_power(k, true)?);

    Ok(DirichletConstants {
        k,
        c_k,
        d_k,
        h: h.clone(),
    })
}

/// Upper bound on |Σ_{a<n≤b} n^{-1-it}| from the block lemma, taking `t` in
/// the log domain so that heights like e^3069 are usable.
///
/// Requires `a < b ≤ h·a`.
pub fn vdc_dirichlet_bound(
    a: u64,
    b: u64,
    log_t: &Interval,
    k: u32,
    eta3: &Interval,
    h: &Interval,
) -> Result<Interval> {
    if b <= a {
        return Err(Error::Precondition {
            name: "vdc_dirichlet_bound: b > a".into(),
            outcome: crate::rigor::certify_leq(&Interval::from_u64(b), &Interval::from_u64(a)),
        });
    }
    let ratio_ok = crate::rigor::certify_leq_nonstrict(&Interval::from_u64(b), &h.mul(&Interval::from_u64(a)));
    if !ratio_ok.proven() {
        return Err(Error::Precondition {
            name: "vdc_dirichlet_bound: b <= h*a".into(),
            outcome: ratio_ok,
        });
    }
    let consts = ck_dk(eta3, h, k)?;
    let kk = big_k(k);
    let q = Interval::from_rational(&rug::Rational::from((
        Integer::from(k),
        (&kk * 2u32).complete() - 2u32,
    )));
    let inv_2k2 = Interval::from_integer(&((&kk * 2u32).complete() - 2u32)).recip()?;
    let ln_a = Interval::from_u64(a).ln()?;

    // C_k a^{-k/(2K-2)} t^{1/(2K-2)} + D_k a^{k/(2K-2)-2/K} t^{-1/(2K-2)}
    let first = consts
        .c_k
        .mul(&q.neg().mul(&ln_a).add(&log_t.mul(&inv_2k2)).exp());
    let d_exp = Interval::from_rational(&d_exponent(k));
    let second = consts
        .d_k
        .mul(&d_exp.mul(&ln_a).sub(&log_t.mul(&inv_2k2)).exp());
    Ok(first.add(&second))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rigor::certify_leq;

    fn iv(s: &str) -> Interval {
        Interval::parse(s).unwrap()
    }

    #[test]
    fn corput3_large_w_limit() {
        // W -> inf with eta=1, lambda=1: alpha -> 1 + 32/(15 sqrt(pi)),
        // beta -> 64/(3 sqrt(pi)); oracle values from 40-digit evaluation.
        let w = Interval::parse("1e40").unwrap();
        let c = corput3_alpha_beta(&w, &iv("1"), &iv("1")).unwrap();
        assert!((c.alpha.mid_f64() - 2.2036044449018801).abs() < 1e-9);
        assert!((c.beta.mid_f64() - 12.036044449018801).abs() < 1e-9);
    }

    #[test]
    fn corput3_at_w_one() {
        let c = corput3_alpha_beta(&iv("1"), &iv("1"), &iv("1")).unwrap();
        assert!((c.alpha.mid_f64() - 6.702153729712779).abs() < 1e-12);
        assert!((c.beta.mid_f64() - 16.036044449018801).abs() < 1e-12);
        // W <= 1 makes the bound worse than trivial: alpha >= 1
        assert!(c.alpha.lo_f64() >= 1.0);
    }

    #[test]
    fn corput3_rejects_bad_args() {
        assert!(corput3_alpha_beta(&iv("0"), &iv("1"), &iv("1")).is_err());
        assert!(corput3_alpha_beta(&iv("1"), &iv("0.5"), &iv("1")).is_err());
        assert!(corput3_alpha_beta(&iv("1"), &iv("1"), &iv("-1")).is_err());
    }

    #[test]
    fn delta3_tends_to_one() {
        let d = delta3_boundary(&iv("1e-12")).unwrap();
        assert!((d.mid_f64() - 1.0).abs() < 1e-6);
    }

    #[test]
    fn b3_independent_of_omega() {
        let eta3 = iv("0.8410538348318537");
        let x = a3_b3(&eta3, &iv("2")).unwrap();
        let y = a3_b3(&eta3, &iv("10")).unwrap();
        assert_eq!(x.b_k.lo_string(), y.b_k.lo_string());
        assert_eq!(x.b_k.hi_string(), y.b_k.hi_string());
    }

    #[test]
    fn delta_k_decreasing() {
        let eta3 = iv("0.8410538348318537");
        let mut prev = delta_k(&eta3, 3).unwrap();
        for k in 4..=64 {
            let d = delta_k(&eta3, k).unwrap();
            assert!(d.hi_f64() <= prev.hi_f64() + 1e-30, "delta not decreasing at k={k}");
            prev = d;
        }
        // and tends to 1
        assert!((delta_k(&eta3, 64).unwrap().mid_f64() - 1.0).abs() < 1e-3);
    }

    #[test]
    fn ak_bk_rejects_small_k() {
        assert!(ak_bk(&iv("1"), &iv("2"), 2).is_err());
    }

    #[test]
    fn ck_dk_no_overflow_at_k200() {
        let c = ck_dk(&iv("0.8410538348318537"), &iv("1.0072318915891114"), 200).unwrap();
        assert!(c.c_k.is_finite() && c.c_k.is_positive());
        assert!(c.d_k.is_finite() && c.d_k.is_positive());
    }

    #[test]
    fn ck_dk_vanish_as_h_to_one() {
        let eta3 = iv("0.8410538348318537");
        let c1 = ck_dk(&eta3, &iv("1.0001"), 4).unwrap();
        let c2 = ck_dk(&eta3, &iv("1.00001"), 4).unwrap();
        assert!(c2.c_k.hi_f64() < c1.c_k.hi_f64() / 5.0);
        assert!(c2.d_k.hi_f64() < c1.d_k.hi_f64() / 5.0);
    }

    #[test]
    fn ck_dk_monotone_in_h() {
        // C_k and D_k non-decreasing in h over a grid h in (1, 2]
        let eta3 = iv("0.8410538348318537");
        for k in [3u32, 5, 8] {
            let mut prev: Option<DirichletConstants> = None;
            for ih in 1..=10 {
                let h = Interval::point(1.0 + 0.1 * f64::from(ih));
                let c = ck_dk(&eta3, &h, k).unwrap();
                if let Some(p) = prev {
                    assert!(c.c_k.hi_f64() >= p.c_k.hi_f64() - 1e-12);
                    assert!(c.d_k.hi_f64() >= p.d_k.hi_f64() - 1e-12);
                }
                prev = Some(c);
            }
        }
    }

    #[test]
    fn d_exponent_nonnegative() {
        for k in 3..=64 {
            assert!(d_exponent(k) >= 0, "k/(2K-2)-2/K negative at k={k}");
        }
    }

    #[test]
    fn dirichlet_bound_preconditions() {
        let eta3 = iv("1.0");
        let h = iv("1.5");
        let lt = Interval::point(10.0);
        assert!(vdc_dirichlet_bound(10, 10, &lt, 3, &eta3, &h).is_err());
        assert!(vdc_dirichlet_bound(10, 16, &lt, 3, &eta3, &h).is_err()); // 16 > 1.5*10
        assert!(vdc_dirichlet_bound(10, 15, &lt, 3, &eta3, &h).is_ok());
    }

    #[test]
    fn dirichlet_bound_extreme_height() {
        // a = 10^6, b = 1.007*10^6, t = e^3069, k = 6: finite positive bound
        let b = vdc_dirichlet_bound(
            1_000_000,
            1_007_000,
            &Interval::from_u64(3069),
            6,
            &iv("0.8410538348318537"),
            &iv("1.0072318915891114"),
        )
        .unwrap();
        assert!(b.is_finite() && b.is_positive());
    }

    #[test]
    fn mu_coefficient_below_two_pow_one_twelfth() {
        // 2^{19/12}(K-1)/sqrt((2K-1)(4K-3)) increases toward 2^{1/12}; the
        // k=10 value is the paper's mu_10
        let m10 = mu_coeff(10).unwrap();
        assert!((m10.mid_f64() - 1.0586862036501848).abs() < 1e-12);
        let cap = Interval::ratio(1, 12).exp2();
        for k in [10u32, 20, 40, 64] {
            assert!(certify_leq(&mu_coeff(k).unwrap(), &cap).proven());
        }
    }
}
