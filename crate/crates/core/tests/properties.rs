use proptest::prelude::*;
use rug::ops::Pow;
use rug::{Float, Rational};

use septica::closed_forms::{evaluate_closed_form, expr, REGISTRY};
use septica::precision::{agree_digits, cos_rational_pi, to_decimal, Context, Ratio};
use septica::septic::{chebyshev_u, discriminants, run_pipeline, seventh_power_target};
use septica::theta::{f_product, f_series, phi, u_component, uvw_series, Nome};

fn ctx(d: u32) -> Context {
    Context::new(d).unwrap()
}

/// `k/1000` as an exact-ish decimal.
fn milli(c: &Context, k: i32) -> Float {
    c.real(k) / 1000u32
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn triple_product(a in -900i32..900, b in -900i32..900) {
        let c = ctx(30);
        let (a, b) = (milli(&c, a), milli(&c, b));
        let s = f_series(&a, &b, &c).unwrap();
        let p = f_product(&a, &b, &c).unwrap();
        prop_assert!(agree_digits(&s, &p) >= 28, "{} vs {}", s, p);
    }

    #[test]
    fn f_is_symmetric(a in -900i32..900, b in -900i32..900) {
        let c = ctx(30);
        let (a, b) = (milli(&c, a), milli(&c, b));
        prop_assert!(agree_digits(&f_series(&a, &b, &c).unwrap(), &f_series(&b, &a, &c).unwrap()) >= 28);
    }

    #[test]
    fn theta_transformation(num in 1u64..60, den in 1u64..60) {
        // φ(e^{−π/√n}) = n^{1/4} φ(e^{−π√n})
        let c = ctx(30);
        let n = Ratio::new(num, den).unwrap();
        let lhs = phi(&Nome::exp_neg_pi_sqrt(n.recip(), &c), &c).unwrap();
        let rhs = n.to_real(&c).root(4) * phi(&Nome::exp_neg_pi_sqrt(n, &c), &c).unwrap();
        prop_assert!(agree_digits(&lhs, &rhs) >= 28);
    }

    #[test]
    fn bounds_and_son_identities(k in 10i32..950) {
        let c = ctx(30);
        let q = Nome::new(milli(&c, k)).unwrap();
        let s = run_pipeline(&q, &c).unwrap();
        let (u, v, w) = uvw_series(&q, &c).unwrap();
        prop_assert!(u < 2 && u > v && v > w && w > 0);
        prop_assert!(s.p > 0 && s.p < 8);
        // u⁷ + v⁷ + w⁷ against the target in p and M
        let sevens = u.clone().pow(7u32) + v.clone().pow(7u32) + w.clone().pow(7u32);
        prop_assert!(agree_digits(&sevens, &seventh_power_target(&s.p, &s.quartic_ratio)) >= 25);
        // u³v + v³w + w³u = 2(M − 3p − 1)
        let cyc = u.clone().pow(3u32) * &v + v.clone().pow(3u32) * &w + w.clone().pow(3u32) * &u;
        let rhs = (s.quartic_ratio.clone() - s.p.clone() * 3u32 - 1u32) * 2u32;
        prop_assert!(agree_digits(&cyc, &rhs) >= 25);
        prop_assert!(agree_digits(&s.uvw.0, &u) >= 25);
        prop_assert!(agree_digits(&s.uvw.2, &w) >= 25);
    }

    #[test]
    fn discriminant_product(k in 1i32..7999) {
        let c = ctx(40);
        let p = milli(&c, k);
        let (plus, minus) = discriminants(&p, &c).unwrap();
        prop_assert!(minus > 0);
        let rhs = p.clone().pow(10u32) * (p - 8u32).pow(6u32);
        prop_assert!(agree_digits(&(plus * minus), &rhs) >= 20);
    }

    #[test]
    fn dissection_is_ordered(k in 50i32..950, half in 2u32..6) {
        let n = 2 * half + 1;
        let c = ctx(30);
        let q = Nome::new(milli(&c, k)).unwrap();
        let us: Vec<Float> = (0..=half).map(|j| u_component(&q, n, j, &c).unwrap()).collect();
        prop_assert!(us.windows(2).all(|w| w[0] > w[1]));
        prop_assert!(*us.last().unwrap() > 0);
    }

    #[test]
    fn chebyshev_closed_form(n in 0u32..12, t in 1i32..999) {
        // U_n(cos θ) = sin((n+1)θ)/sin θ
        let c = ctx(30);
        let theta = milli(&c, t) * c.pi();
        let x = theta.clone().cos();
        let expect = (theta.clone() * (n + 1)).sin() / theta.sin();
        let got = chebyshev_u(n, &x, &c);
        let gap = (got - &expect).abs();
        prop_assert!(gap < c.tolerance(4) * expect.abs().max(&c.real(1)));
    }

    #[test]
    fn cosine_of_rational_multiple(k in -50i64..50, m in 1u64..20) {
        let c = ctx(30);
        let angle = c.pi() * c.real(k) / c.real(m);
        let got = cos_rational_pi(k, m, &c).unwrap();
        prop_assert!((got - angle.cos()).abs() < c.tolerance(0));
    }

    #[test]
    fn agreement_counts_digits(e in 3i32..40) {
        let c = ctx(50);
        let a = c.real(3);
        let b = a.clone() * (c.real(1) + c.real(10).pow(-e));
        let d = agree_digits(&a, &b);
        prop_assert!(d == i64::from(e) || d == i64::from(e) - 1, "{} at 10^-{}", d, e);
    }

    #[test]
    fn ratio_round_trip(num in 1u64..100_000, den in 1u64..100_000) {
        let r = Ratio::new(num, den).unwrap();
        prop_assert_eq!(r.to_string().parse::<Ratio>().unwrap(), r);
    }

    #[test]
    fn rational_expressions_round_once(a in -1000i64..1000, b in 1i64..1000, k in 0u32..5) {
        // evaluated exactly, then rounded once to working precision
        let c = ctx(20);
        let src = format!("let x = {a}; let y = {b}; (x*y - x)/y + x^{k}");
        prop_assert_eq!(expr::parse(&src).unwrap().bindings.len(), 2);
        let got = septica::closed_forms::evaluate_expression(&src, &c).unwrap();
        let (x, y) = (Rational::from(a), Rational::from(b));
        let exact = (x.clone() * &y - &x) / &y + x.pow(k);
        prop_assert_eq!(got, c.real(&exact));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn precision_monotone(idx in 0usize..REGISTRY.len(), d in 15u32..45) {
        // the value at d digits is the truncation of the value at d + 20
        let id = REGISTRY[idx].id;
        let lo = evaluate_closed_form(id, &ctx(d)).unwrap();
        let hi = evaluate_closed_form(id, &ctx(d + 20)).unwrap();
        prop_assert_eq!(to_decimal(&lo, d), to_decimal(&hi, d), "{}", id);
    }
}
