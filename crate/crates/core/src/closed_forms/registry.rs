use super::ClosedFormEntry;

const fn entry(
    id: &'static str,
    description: &'static str,
    anchor: &'static str,
    recipe: &'static str,
) -> ClosedFormEntry {
    ClosedFormEntry {
        id,
        description,
        anchor,
        recipe,
        params: &[],
    }
}

const THM1_BRACKET: &str = "1 + (cospi(1/7)/(2*cospi(2/7)^2))^(2/7) \
    + (cospi(2/7)/(2*cospi(3/7)^2))^(2/7) \
    + (cospi(3/7)/(2*cospi(1/7)^2))^(2/7)";

const G343_WATSON: &str = "\
let s1 = 1/2 + 3*cospi(2/7);
let s2 = 1/2 + 3*cospi(4/7);
let s3 = 1/2 + 3*cospi(8/7);
let t1 = s3 - s2;
let t2 = s1 - s3;
let t3 = s2 - s1;
let b1 = -(3*s1 + 5*t1)/3;
let b2 = -(3*s2 + 5*t2)/3;
let b3 = -(3*s3 + 5*t3)/3;
let c1 = -(7 + 4*s1 + 2*t1)/3;
let c2 = -(7 + 4*s2 + 2*t2)/3;
let c3 = -(7 + 4*s3 + 2*t3)/3;
let b = root(b1^4*b2^2*b3, 7) + root(b2^4*b3^2*b1, 7) + root(b3^4*b1^2*b2, 7);
let c = root(c1^4*c2^2*c3, 7) + root(c2^4*c3^2*c1, 7) + root(c3^4*c1^2*c2, 7);
2^(1/4)*7/(b + c)";

const G343_THM2: &str = "\
let m = 7^(3/2)/@thm1-bracket^2;
let s = 12*m^2*(9*(7 - m^2) + sqrt(3)*sqrt(27*(m^4 + 49) + 122*m^2));
let p = 1 + 10*m^2/root(s, 3) - root(s, 3)/6;
2^(1/4)*p^(-1/7)";

const G441: &str = "\
let q = (sqrt(3 + sqrt(7)) + (6*sqrt(7))^(1/4))/(sqrt(3 + sqrt(7)) - (6*sqrt(7))^(1/4));
sqrt((sqrt(3) + sqrt(7))/2)*(2 + sqrt(3))^(1/6)*sqrt((2 + sqrt(7) + sqrt(7 + 4*sqrt(7)))/2)*sqrt(q)";

const G1225: &str = "\
let k = (8 + 3*sqrt(7))*sqrt(10*sqrt(7));
(1 + sqrt(5))/2*(6 + sqrt(35))^(1/4)*((7^(1/4) + sqrt(4 + sqrt(7)))/2)^(3/2)
    *(sqrt((43 + 15*sqrt(7) + k)/8) + sqrt((35 + 15*sqrt(7) + k)/8))";

const E21_P: &str = "\
let q = (sqrt(3 + sqrt(7)) + (6*sqrt(7))^(1/4))/(sqrt(3 + sqrt(7)) - (6*sqrt(7))^(1/4));
sqrt(2)*(2 - sqrt(3))*sqrt(sqrt(3) + sqrt(7))*sqrt(2 + sqrt(7) + sqrt(7 + 4*sqrt(7)))*sqrt(q)";

const ALT_E21: &str = "\
let q = (sqrt(3 + sqrt(7)) + (6*sqrt(7))^(1/4))/(sqrt(3 + sqrt(7)) - (6*sqrt(7))^(1/4));
let inner = (sqrt(3) + sqrt(7))*(2 + sqrt(7) + sqrt(7 + 4*sqrt(7)))
    *(22 + 8*sqrt(7) - (19 + 7*sqrt(7))/2*sqrt(2*sqrt(7)))*q;
sqrt((sqrt(13 + sqrt(7)) + sqrt(7 + 3*sqrt(7)))/42)*28^(1/16)
    *(1 + sqrt(2)*sqrt(2 + sqrt(3))/4*inner^(3/2))^(1/4)";

const E35_P: &str = "\
let k = (8 + 3*sqrt(7))*sqrt(10*sqrt(7));
(9 - 4*sqrt(5))/4*sqrt(sqrt(14) + sqrt(10))*(7^(1/4) + sqrt(4 + sqrt(7)))^(3/2)
    *(sqrt(43 + 15*sqrt(7) + k) + sqrt(35 + 15*sqrt(7) + k))";

const ALT_E35: &str = "\
let k = (8 + 3*sqrt(7))*sqrt(10*sqrt(7));
let w = sqrt(43 + 15*sqrt(7) + k) + sqrt(35 + 15*sqrt(7) + k);
let d = 16466 + 6223*sqrt(7) - 7/2*(2045 + 773*sqrt(7))*sqrt(2*sqrt(7));
sqrt((sqrt(13 + sqrt(7)) + sqrt(7 + 3*sqrt(7)))/70)*28^(1/16)
    *(1 + (1 + sqrt(5))/4*sqrt(sqrt(7) + sqrt(5))*d^(1/4)*w)^(1/2)";

const E49_ALPHA: &str = "\
let t = sqrt(2)*7^(1/4);
((2/3)*(sqrt(7) + 2)*(5 + 3*t - sqrt(7))
    + 2*(sqrt(7) - 1)*(1 - t + sqrt(7))*cospi(1/7)
    + (2/3)*(sqrt(7) - 1)*(3*t - sqrt(7) - 1)*cospi(2/7))/sqrt(7)";

const E49_BETA: &str = "\
let t = sqrt(2)*7^(1/4);
((1/9)*(sqrt(7) + 5)*(13 + 9*t + sqrt(7))
    - 8*cospi(1/7)
    + 2*(sqrt(7) - 1)*(1 - t + sqrt(7))*cospi(2/7))/sqrt(7)";

const E49_GAMMA: &str = "\
let t = sqrt(2)*7^(1/4);
((1/3)*(sqrt(7) + 5)*(1 + 3*t + sqrt(7))
    + (2/3)*(sqrt(7) - 1)*(3*t - sqrt(7) - 1)*cospi(1/7)
    - 8*cospi(2/7))/sqrt(7)";

const E49: &str = "\
let p = @thm-e49-p;
let a = @thm-e49-alpha;
let b = @thm-e49-beta;
let c = @thm-e49-gamma;
(1 + (a^2*p/b)^(1/7) + (b^2*p/c)^(1/7) + (c^2*p/a)^(1/7))/7";

/// Every registered constant, sorted by id.
pub static REGISTRY: &[ClosedFormEntry] = &[
    entry(
        "alt-e21",
        "φ(e^{-21π})/φ(e^{-π}) via the 3π√n formula at n = 49",
        "second display for φ(e^{-21π}), containing 22 + 8√7",
        ALT_E21,
    ),
    entry(
        "alt-e35",
        "φ(e^{-35π})/φ(e^{-π}) via the 5π√n formula at n = 49",
        "second display for φ(e^{-35π}), containing 16466 + 6223√7",
        ALT_E35,
    ),
    entry(
        "e21-p",
        "p for q = e^{-π/√441}, i.e. 2√2 G₄₄₁/G₉⁷ simplified",
        "nested-radical p in the φ(e^{-21π}) evaluation",
        E21_P,
    ),
    entry(
        "e3-const",
        "φ(e^{-3π})/φ(e^{-π})",
        "classical 1/(6√3 − 9)^{1/4}",
        "1/(6*sqrt(3) - 9)^(1/4)",
    ),
    entry(
        "e35-p",
        "p for q = e^{-π/√1225}, i.e. 2√2 G₁₂₂₅/G₂₅⁷ simplified",
        "nested-radical p in the φ(e^{-35π}) evaluation",
        E35_P,
    ),
    entry(
        "e5-const",
        "φ(e^{-5π})/φ(e^{-π})",
        "classical 1/(5√5 − 10)^{1/2}",
        "1/(5*sqrt(5) - 10)^(1/2)",
    ),
    entry("g1", "class invariant G₁", "G₁ = 1", "1"),
    entry(
        "g1225",
        "class invariant G₁₂₂₅",
        "Watson's value with (6 + √35)^{1/4} and (8 + 3√7)√(10√7)",
        G1225,
    ),
    entry(
        "g147",
        "class invariant G₁₄₇",
        "2^{1/12}(1/2 + (√(7/4) − 28^{1/6})/√3)^{-1}",
        "2^(1/12)/(1/2 + (sqrt(7/4) - 28^(1/6))/sqrt(3))",
    ),
    entry(
        "g25",
        "class invariant G₂₅",
        "golden ratio (1 + √5)/2",
        "(1 + sqrt(5))/2",
    ),
    entry("g3", "class invariant G₃", "G₃ = 2^{1/12}", "2^(1/12)"),
    entry(
        "g343-thm2",
        "class invariant G₃₄₃ = 2^{1/4} p^{-1/7}, p the real root of a cubic in the degree-7 multiplier",
        "G₃₄₃ from the completed septic identity at q = e^{-π√7}",
        G343_THM2,
    ),
    entry(
        "g343-watson",
        "class invariant G₃₄₃ from Watson's solution of x⁷ − 7x⁶ − 7x⁵ − 7x⁴ − 1 = 0",
        "Watson's radicals b_r, c_r built from σ_r = 1/2 + 3cos(2^r π/7), with cyclic τ_r",
        G343_WATSON,
    ),
    entry(
        "g441",
        "class invariant G₄₄₁",
        "product of four radicals including (2 + √3)^{1/6}",
        G441,
    ),
    entry(
        "g49",
        "class invariant G₄₉",
        "(7^{1/4} + √(4 + √7))/2",
        "(7^(1/4) + sqrt(4 + sqrt(7)))/2",
    ),
    entry("g7", "class invariant G₇", "G₇ = 2^{1/4}", "2^(1/4)"),
    entry(
        "g9",
        "class invariant G₉",
        "((1 + √3)/√2)^{1/3}",
        "((1 + sqrt(3))/sqrt(2))^(1/3)",
    ),
    ClosedFormEntry {
        id: "m-of-p",
        description: "degree-7 multiplier m(p) = (M(p))^{1/2}, M the admissible quartic-ratio root",
        anchor: "m(p) = (1 + 5p/2 + ½√((2+5p)² − 4(1−p)³))^{1/2}",
        recipe: "sqrt(1 + 5*p/2 + sqrt((2 + 5*p)^2 - 4*(1 - p)^3)/2)",
        params: &[("p", "1")],
    },
    entry(
        "phi-e-7pi-sqrt3",
        "φ(e^{-7π√3})",
        "Γ(1/3)^{3/2} form combining φ(e^{-π√3}) with the 7π√3 ratio",
        "gamma(1/3)^(3/2)/(2^(7/6)*3^(5/8)*sqrt(7)*pi)\
         *sqrt((sqrt(21) + 3)*28^(1/3) + 8*sqrt(3)*28^(1/6) + 4*sqrt(21) + 6)",
    ),
    entry("phi-e-pi", "φ(e^{-π})", "π^{1/4}/Γ(3/4)", "pi^(1/4)/gamma(3/4)"),
    entry(
        "phi-e-pi-sqrt3",
        "φ(e^{-π√3})",
        "3^{1/8} Γ^{3/2}(1/3) / (2^{2/3} π)",
        "3^(1/8)*gamma(1/3)^(3/2)/(2^(2/3)*pi)",
    ),
    entry(
        "phi-e-pi-sqrt7-beta",
        "φ(e^{-π√7}), beta-function form",
        "√2 ((cos(π/7) − cos(3π/7)) B(1/7, 2/7))^{1/2} / (7^{3/8} √π)",
        "sqrt(2)*sqrt((cospi(1/7) - cospi(3/7))*beta(1/7, 2/7))/(7^(3/8)*sqrt(pi))",
    ),
    entry(
        "phi-e-pi-sqrt7-gamma",
        "φ(e^{-π√7}), gamma-function form",
        "(Γ(1/7)Γ(2/7)Γ(4/7))^{1/2} / (√2 · 7^{1/8} π)",
        "sqrt(gamma(1/7)*gamma(2/7)*gamma(4/7))/(sqrt(2)*7^(1/8)*pi)",
    ),
    ClosedFormEntry {
        id: "ratio-3pisqrtn",
        description: "φ(e^{-3π√n})/φ(e^{-π√n}) from G_n and G_{9n}",
        anchor: "(1/√3)(1 + 2√2 G_{9n}³/G_n⁹)^{1/4}",
        recipe: "(1 + 2*sqrt(2)*G(9*n)^3/G(n)^9)^(1/4)/sqrt(3)",
        params: &[("n", "1")],
    },
    ClosedFormEntry {
        id: "ratio-5pisqrtn",
        description: "φ(e^{-5π√n})/φ(e^{-π√n}) from G_n and G_{25n}",
        anchor: "(1/√5)(1 + 2G_{25n}/G_n⁵)^{1/2}",
        recipe: "(1 + 2*G(25*n)/G(n)^5)^(1/2)/sqrt(5)",
        params: &[("n", "1")],
    },
    ClosedFormEntry {
        id: "ratio-7pisqrtn",
        description: "φ(e^{-7π√n})/φ(e^{-π√n}) from G_n and G_{49n}",
        anchor: "(1/√7)(1 + 5√2 G_{49n}/G_n⁷ + ½√(…))^{1/4}",
        recipe: "let x = sqrt(2)*G(49*n)/G(n)^7;
            (1 + 5*x + sqrt((2 + 10*x)^2 - 4*(1 - 2*x)^3)/2)^(1/4)/sqrt(7)",
        params: &[("n", "1")],
    },
    ClosedFormEntry {
        id: "ratio-9pisqrtn",
        description: "φ(e^{-9π√n})/φ(e^{-π√n}) from G_n and G_{9n}",
        anchor: "(1/3)(1 + √2 G_{9n}/G_n³)",
        recipe: "(1 + sqrt(2)*G(9*n)/G(n)^3)/3",
        params: &[("n", "1")],
    },
    entry(
        "thm-e21",
        "φ(e^{-21π})/φ(e^{-π})",
        "(m(p)/(7(6√3 − 9)^{1/2}))^{1/2} with the nested-radical p",
        "sqrt(@m-of-p(p = @e21-p)/(7*sqrt(6*sqrt(3) - 9)))",
    ),
    entry(
        "thm-e35",
        "φ(e^{-35π})/φ(e^{-π})",
        "(m(p)/(35(√5 − 2)))^{1/2} with the nested-radical p",
        "sqrt(@m-of-p(p = @e35-p)/(35*(sqrt(5) - 2)))",
    ),
    entry(
        "thm-e49",
        "φ(e^{-49π})/φ(e^{-π})",
        "(1 + u + v + w)/7 with explicit α, β, γ",
        E49,
    ),
    entry(
        "thm-e49-alpha",
        "root α of the cubic at q = e^{-π/7}",
        "α in ℚ(√7, 7^{1/4}, cos(π/7))",
        E49_ALPHA,
    ),
    entry(
        "thm-e49-beta",
        "root β of the cubic at q = e^{-π/7}",
        "β in ℚ(√7, 7^{1/4}, cos(π/7))",
        E49_BETA,
    ),
    entry(
        "thm-e49-gamma",
        "root γ of the cubic at q = e^{-π/7}",
        "γ in ℚ(√7, 7^{1/4}, cos(π/7))",
        E49_GAMMA,
    ),
    entry(
        "thm-e49-p",
        "p at q = e^{-π/7}",
        "p = √7 + √2·7^{1/4} + 1",
        "sqrt(7) + sqrt(2)*7^(1/4) + 1",
    ),
    entry(
        "thm-e7",
        "φ²(e^{-7π})/φ²(e^{-π})",
        "(√(13 + √7) + √(7 + 3√7)) 28^{1/8}/14",
        "(sqrt(13 + sqrt(7)) + sqrt(7 + 3*sqrt(7)))/14*28^(1/8)",
    ),
    entry(
        "thm-e7pisqrt3",
        "φ²(e^{-7π√3})/φ²(e^{-π√3})",
        "((√21 + 3)28^{1/3} + 8√3·28^{1/6} + 4√21 + 6)/(42√3)",
        "((sqrt(21) + 3)*28^(1/3) + 8*sqrt(3)*28^(1/6) + 4*sqrt(21) + 6)/(42*sqrt(3))",
    ),
    entry(
        "thm1-bracket",
        "1 + u + v + w at q = e^{-π/√7}",
        "the completed bracket with exponents 2/7 on cos(kπ/7)/(2cos²(·)) quotients",
        THM1_BRACKET,
    ),
    entry(
        "thm1-phi-7pi-sqrt7",
        "φ(e^{-7π√7})",
        "(Γ(1/7)Γ(2/7)Γ(4/7))^{1/2}/(√2 · 7^{7/8} π) times the completed bracket",
        "sqrt(gamma(1/7)*gamma(2/7)*gamma(4/7))/(sqrt(2)*7^(7/8)*pi)*@thm1-bracket",
    ),
    entry(
        "thm1-ratio",
        "φ(e^{-7π√7})/φ(e^{-π√7})",
        "7^{-3/4} times the completed bracket",
        "7^(-3/4)*@thm1-bracket",
    ),
    entry(
        "trig-41",
        "sum of squared cosine quotients",
        "(cos(π/7)/(2cos²(2π/7)))² + (cos(2π/7)/(2cos²(3π/7)))² + (cos(3π/7)/(2cos²(π/7)))² = 41",
        "(cospi(1/7)/(2*cospi(2/7)^2))^2 + (cospi(2/7)/(2*cospi(3/7)^2))^2 + (cospi(3/7)/(2*cospi(1/7)^2))^2",
    ),
];
