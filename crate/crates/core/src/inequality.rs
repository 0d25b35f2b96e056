//! Exact checkers for the four functions family: the AD hypothesis and its
//! conclusions (plain, q-analogue, complement-sum and set-minus forms),
//! log-supermodularity, monotonicity and the q-FKG inequality.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::Serialize;

use crate::boolean::BooleanView;
use crate::error::{Error, Result};
use crate::poly::{poly_dominates, QPolynomial};
use crate::rational::Rational;
use crate::reduction::fkg_quadruple;
use crate::verdict::{Side, Verdict, Witness};
use crate::weights::{same_carrier, FamilySelection, WeightFunction, WeightQuadruple};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Increasing,
    Decreasing,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Increasing => "increasing",
            Direction::Decreasing => "decreasing",
        })
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "increasing" | "inc" => Ok(Direction::Increasing),
            "decreasing" | "dec" => Ok(Direction::Decreasing),
            _ => Err(Error::Param(format!("unknown direction `{s}`"))),
        }
    }
}

fn pair_failure(condition: &str, names: [(&str, &str); 2], lhs: Rational, rhs: Rational) -> Verdict {
    Verdict::fail(Witness::new(
        condition,
        &names,
        Side::Rational(lhs),
        Side::Rational(rhs),
    ))
}

/// `α(x)β(y) ≤ γ(x∨y)δ(x∧y)` for every ordered pair, including `x = y`.
pub fn check_ad_hypothesis(quad: &WeightQuadruple) -> Verdict {
    let l = quad.carrier();
    for x in l.elements() {
        let a = quad.alpha.value(x);
        if a.is_zero() {
            continue;
        }
        for y in l.elements() {
            let lhs = a * quad.beta.value(y);
            if lhs.is_zero() {
                continue;
            }
            let rhs = quad.gamma.value(l.join(x, y)) * quad.delta.value(l.meet(x, y));
            if lhs > rhs {
                return pair_failure(
                    "ad-hypothesis",
                    [("x", l.name(x)), ("y", l.name(y))],
                    lhs,
                    rhs,
                );
            }
        }
    }
    Verdict::pass()
}

/// Sums of the four functions over `X`, `Y`, `X ∨ Y` and `X ∧ Y`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FourFtReport {
    #[serde(skip)]
    pub join: FamilySelection,
    #[serde(skip)]
    pub meet: FamilySelection,
    #[serde(serialize_with = "crate::rational::serialize")]
    pub alpha_sum: Rational,
    #[serde(serialize_with = "crate::rational::serialize")]
    pub beta_sum: Rational,
    #[serde(serialize_with = "crate::rational::serialize")]
    pub gamma_sum: Rational,
    #[serde(serialize_with = "crate::rational::serialize")]
    pub delta_sum: Rational,
    #[serde(serialize_with = "crate::rational::serialize")]
    pub lhs: Rational,
    #[serde(serialize_with = "crate::rational::serialize")]
    pub rhs: Rational,
    pub verdict: Verdict,
}

/// `α(X)β(Y) ≤ γ(X∨Y)δ(X∧Y)`, with `X∨Y` and `X∧Y` taken as sets.
pub fn check_4ft_conclusion(
    quad: &WeightQuadruple,
    x: &FamilySelection,
    y: &FamilySelection,
) -> FourFtReport {
    let l = quad.carrier();
    let join = x.join_with(y, l);
    let meet = x.meet_with(y, l);
    let alpha_sum = quad.alpha.total(x);
    let beta_sum = quad.beta.total(y);
    let gamma_sum = quad.gamma.total(&join);
    let delta_sum = quad.delta.total(&meet);
    let lhs = &alpha_sum * &beta_sum;
    let rhs = &gamma_sum * &delta_sum;
    let verdict = if lhs > rhs {
        Verdict::fail(Witness::new(
            "4ft",
            &[],
            Side::Rational(lhs.clone()),
            Side::Rational(rhs.clone()),
        ))
    } else {
        Verdict::pass()
    };
    FourFtReport {
        join,
        meet,
        alpha_sum,
        beta_sum,
        gamma_sum,
        delta_sum,
        lhs,
        rhs,
        verdict,
    }
}

/// `Σ_{x ∈ S} w(x) q^{r(x)}`.
pub fn q_weighted_polynomial(w: &WeightFunction, s: &FamilySelection) -> QPolynomial {
    let l = w.carrier();
    let top = s.iter().map(|x| l.rank(x)).max().unwrap_or(0);
    let mut coeffs = vec![Rational::zero(); top + 1];
    for x in s.iter() {
        coeffs[l.rank(x)] += w.value(x);
    }
    QPolynomial::new(coeffs)
}

/// Both sides of the q-analogue of the four functions theorem.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Q4ftReport {
    pub alpha: QPolynomial,
    pub beta: QPolynomial,
    pub gamma: QPolynomial,
    pub delta: QPolynomial,
    pub lhs: QPolynomial,
    pub rhs: QPolynomial,
    pub verdict: Verdict,
    /// `X` or `Y` is empty, so the left side is zero and the check says nothing.
    pub vacuous: bool,
}

/// `Σ_X α q^r · Σ_Y β q^r ≪ Σ_{X∨Y} γ q^r · Σ_{X∧Y} δ q^r` on a distributive
/// carrier.
pub fn check_q4ft(
    quad: &WeightQuadruple,
    x: &FamilySelection,
    y: &FamilySelection,
) -> Result<Q4ftReport> {
    let l = quad.carrier();
    l.require_distributive()?;
    let join = x.join_with(y, l);
    let meet = x.meet_with(y, l);
    let alpha = q_weighted_polynomial(&quad.alpha, x);
    let beta = q_weighted_polynomial(&quad.beta, y);
    let gamma = q_weighted_polynomial(&quad.gamma, &join);
    let delta = q_weighted_polynomial(&quad.delta, &meet);
    let lhs = &alpha * &beta;
    let rhs = &gamma * &delta;
    let verdict = poly_dominates(&lhs, &rhs);
    Ok(Q4ftReport {
        alpha,
        beta,
        gamma,
        delta,
        lhs,
        rhs,
        verdict,
        vacuous: x.is_empty() || y.is_empty(),
    })
}

/// Two exact sums and their comparison.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SumComparison {
    #[serde(serialize_with = "crate::rational::serialize")]
    pub lhs: Rational,
    #[serde(serialize_with = "crate::rational::serialize")]
    pub rhs: Rational,
    pub verdict: Verdict,
}

impl SumComparison {
    pub(crate) fn new(condition: &str, lhs: Rational, rhs: Rational) -> Self {
        let verdict = if lhs > rhs {
            Verdict::fail(Witness::new(
                condition,
                &[],
                Side::Rational(lhs.clone()),
                Side::Rational(rhs.clone()),
            ))
        } else {
            Verdict::pass()
        };
        SumComparison { lhs, rhs, verdict }
    }
}

/// `Σ_A α(A)β(Aᶜ) ≤ Σ_C γ(C)δ(Cᶜ)` on a Boolean carrier.
pub fn check_q4ft_stronger(quad: &WeightQuadruple) -> Result<SumComparison> {
    let l = quad.carrier();
    let view = BooleanView::of(l)?;
    let complement_sum = |u: &WeightFunction, v: &WeightFunction| -> Rational {
        l.elements()
            .map(|a| u.value(a) * v.value(view.complement(a)))
            .sum()
    };
    Ok(SumComparison::new(
        "complement-sum",
        complement_sum(&quad.alpha, &quad.beta),
        complement_sum(&quad.gamma, &quad.delta),
    ))
}

/// The set-minus hypothesis and the total-sum conclusion, reported
/// independently.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SetminusReport {
    pub hypothesis: Verdict,
    pub conclusion: SumComparison,
}

/// Hypothesis `α(A)β(B) ≤ γ(B∖A)δ(A∖B)` for all pairs; conclusion
/// `α(P(n))β(P(n)) ≤ γ(P(n))δ(P(n))`.
pub fn check_setminus_lemma(quad: &WeightQuadruple) -> Result<SetminusReport> {
    let l = quad.carrier();
    let view = BooleanView::of(l)?;
    let mut hypothesis = Verdict::pass();
    'scan: for a in l.elements() {
        for b in l.elements() {
            let lhs = quad.alpha.value(a) * quad.beta.value(b);
            let (ma, mb) = (view.mask(a), view.mask(b));
            let rhs = quad.gamma.value(view.element(mb & !ma))
                * quad.delta.value(view.element(ma & !mb));
            if lhs > rhs {
                hypothesis = pair_failure("setminus-hypothesis", [("A", l.name(a)), ("B", l.name(b))], lhs, rhs);
                break 'scan;
            }
        }
    }
    let all = FamilySelection::all(l);
    let [a, b, c, d] = quad.functions().map(|w| w.total(&all));
    Ok(SetminusReport {
        hypothesis,
        conclusion: SumComparison::new("setminus-conclusion", a * b, c * d),
    })
}

/// `μ(x)μ(y) ≤ μ(x∨y)μ(x∧y)` for every ordered pair.
pub fn is_log_supermodular(mu: &WeightFunction) -> Verdict {
    let l = mu.carrier();
    for x in l.elements() {
        for y in l.elements() {
            let lhs = mu.value(x) * mu.value(y);
            let rhs = mu.value(l.join(x, y)) * mu.value(l.meet(x, y));
            if lhs > rhs {
                return pair_failure("log-supermodular", [("x", l.name(x)), ("y", l.name(y))], lhs, rhs);
            }
        }
    }
    Verdict::pass()
}

/// Increasing: `f(x) ≤ f(y)` whenever `x ≤ y`; decreasing: whenever `x ≥ y`.
pub fn is_monotone(f: &WeightFunction, direction: Direction) -> Verdict {
    let l = f.carrier();
    for x in l.elements() {
        for y in l.elements() {
            let comparable = match direction {
                Direction::Increasing => l.lt(x, y),
                Direction::Decreasing => l.lt(y, x),
            };
            if comparable && f.value(x) > f.value(y) {
                return pair_failure(
                    direction_condition(direction),
                    [("x", l.name(x)), ("y", l.name(y))],
                    f.value(x).clone(),
                    f.value(y).clone(),
                );
            }
        }
    }
    Verdict::pass()
}

fn direction_condition(d: Direction) -> &'static str {
    match d {
        Direction::Increasing => "increasing",
        Direction::Decreasing => "decreasing",
    }
}

/// The q-FKG polynomials `P_μ(f), P_μ(g), P_μ(1), P_μ(fg)` and both
/// inequalities they support.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FkgReport {
    pub direction: Direction,
    pub p_f: QPolynomial,
    pub p_g: QPolynomial,
    pub p_one: QPolynomial,
    pub p_fg: QPolynomial,
    pub lhs: QPolynomial,
    pub rhs: QPolynomial,
    /// `P_μ(f)P_μ(g) ≪ P_μ(1)P_μ(fg)`.
    pub verdict: Verdict,
    /// The same sides at `q = 1`: `∫f dμ ∫g dμ ≤ ∫1 dμ ∫fg dμ`.
    pub fkg: SumComparison,
    /// AD hypothesis of the quadruple built from `μ, f, g`.
    pub quadruple_hypothesis: Verdict,
}

/// `P_μ(h; q) = Σ_x h(x) μ(x) q^{r(x)}`.
pub fn measure_polynomial(mu: &WeightFunction, h: &WeightFunction) -> Result<QPolynomial> {
    let hm = h.product(mu)?;
    Ok(q_weighted_polynomial(&hm, &FamilySelection::all(mu.carrier())))
}

/// Checks the premises (distributive carrier, log-supermodular `μ`, `f` and
/// `g` monotone in a common direction) and then `P_μ(f)P_μ(g) ≪ P_μ(1)P_μ(fg)`.
/// Constant functions count as monotone both ways; increasing wins a tie.
pub fn check_fkg_q(mu: &WeightFunction, f: &WeightFunction, g: &WeightFunction) -> Result<FkgReport> {
    let l = mu.carrier();
    if !same_carrier(l, f.carrier()) || !same_carrier(l, g.carrier()) {
        return Err(Error::CarrierMismatch);
    }
    l.require_distributive()?;
    if let Some(w) = is_log_supermodular(mu).into_witness() {
        return Err(Error::precondition("mu is not log-supermodular", Some(w)));
    }
    let direction = fkg_direction(f, g)?;
    let one = WeightFunction::constant(l.clone(), Rational::from_integer(1.into()))?;
    let fg = f.product(g)?;
    let p_f = measure_polynomial(mu, f)?;
    let p_g = measure_polynomial(mu, g)?;
    let p_one = measure_polynomial(mu, &one)?;
    let p_fg = measure_polynomial(mu, &fg)?;
    let lhs = &p_f * &p_g;
    let rhs = &p_one * &p_fg;
    let verdict = poly_dominates(&lhs, &rhs);
    let fkg = SumComparison::new("fkg", lhs.eval_at_one(), rhs.eval_at_one());
    let quadruple_hypothesis = check_ad_hypothesis(&fkg_quadruple(mu, f, g, direction)?);
    Ok(FkgReport {
        direction,
        p_f,
        p_g,
        p_one,
        p_fg,
        lhs,
        rhs,
        verdict,
        fkg,
        quadruple_hypothesis,
    })
}

/// Common monotonicity direction of `f` and `g`.
pub fn fkg_direction(f: &WeightFunction, g: &WeightFunction) -> Result<Direction> {
    let [fi, fd, gi, gd] = [
        is_monotone(f, Direction::Increasing),
        is_monotone(f, Direction::Decreasing),
        is_monotone(g, Direction::Increasing),
        is_monotone(g, Direction::Decreasing),
    ];
    if fi.holds() && gi.holds() {
        return Ok(Direction::Increasing);
    }
    if fd.holds() && gd.holds() {
        return Ok(Direction::Decreasing);
    }
    if !fi.holds() && !fd.holds() {
        return Err(Error::precondition("f is not monotone", fi.into_witness()));
    }
    if !gi.holds() && !gd.holds() {
        return Err(Error::precondition("g is not monotone", gi.into_witness()));
    }
    let witness = if fi.holds() { gi } else { fd };
    Err(Error::precondition(
        "f and g are monotone in opposite directions",
        witness.into_witness(),
    ))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::lattice::{boolean, chain, divisor};
    use crate::rational::int;

    fn p2() -> Arc<crate::lattice::Lattice> {
        Arc::new(boolean(2).unwrap())
    }

    fn table() -> WeightQuadruple {
        WeightQuadruple::from_ints(
            &p2(),
            [&[0, 0, 1, 0], &[1, 1, 1, 0], &[0, 0, 1, 1], &[1, 0, 1, 0]],
        )
        .unwrap()
    }

    fn poly(c: &[i64]) -> QPolynomial {
        QPolynomial::from_ints(c)
    }

    #[test]
    fn ad_hypothesis_examples() {
        assert!(check_ad_hypothesis(&table()).holds());
        let l = Arc::new(divisor(12).unwrap());
        let ones = WeightQuadruple::from_ints(&l, [&[1; 6], &[1; 6], &[1; 6], &[1; 6]]).unwrap();
        assert!(check_ad_hypothesis(&ones).holds());

        let b1 = Arc::new(boolean(1).unwrap());
        let q = WeightQuadruple::from_ints(&b1, [&[1, 1], &[1, 1], &[1, 0], &[1, 1]]).unwrap();
        let v = check_ad_hypothesis(&q);
        let w = v.witness().unwrap();
        // (∅, {1}) joins to {1} where γ = 0, and comes first in pair order
        assert_eq!(w.element("x"), Some("{}"));
        assert_eq!(w.element("y"), Some("{1}"));
        assert_eq!(w.lhs, Side::Rational(int(1)));
        assert_eq!(w.rhs, Side::Rational(int(0)));
    }

    #[test]
    fn four_ft_on_table() {
        let q = table();
        let all = FamilySelection::all(q.carrier());
        let r = check_4ft_conclusion(&q, &all, &all);
        assert_eq!((r.alpha_sum.clone(), r.beta_sum.clone()), (int(1), int(3)));
        assert_eq!((r.gamma_sum.clone(), r.delta_sum.clone()), (int(2), int(2)));
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(3), int(4)));
        assert!(r.verdict.holds());

        let r = check_4ft_conclusion(&q, &FamilySelection::empty(), &all);
        assert_eq!(r.lhs, int(0));
        assert!(r.verdict.holds());
    }

    #[test]
    fn weighted_polynomials() {
        let l = p2();
        let all = FamilySelection::all(&l);
        let ones = WeightFunction::constant(l.clone(), int(1)).unwrap();
        assert_eq!(q_weighted_polynomial(&ones, &all), poly(&[1, 2, 1]));
        assert_eq!(q_weighted_polynomial(&table().alpha, &all), poly(&[0, 1]));
        assert!(q_weighted_polynomial(&ones, &FamilySelection::empty()).is_zero());
    }

    #[test]
    fn q4ft_on_table() {
        let q = table();
        let all = FamilySelection::all(q.carrier());
        let r = check_q4ft(&q, &all, &all).unwrap();
        assert_eq!(r.lhs, poly(&[0, 1, 2]));
        assert_eq!(r.rhs, poly(&[0, 1, 2, 1]));
        assert!(r.verdict.holds());
        assert!(!r.vacuous);

        let r = check_q4ft(&q, &FamilySelection::empty(), &all).unwrap();
        assert!(r.lhs.is_zero() && r.verdict.holds() && r.vacuous);
    }

    #[test]
    fn q4ft_all_ones_is_binomial() {
        for n in 0..4 {
            let l = Arc::new(boolean(n).unwrap());
            let one = WeightFunction::constant(l.clone(), int(1)).unwrap();
            let q = WeightQuadruple::new(one.clone(), one.clone(), one.clone(), one).unwrap();
            let all = FamilySelection::all(&l);
            let r = check_q4ft(&q, &all, &all).unwrap();
            let mut binom = poly(&[1]);
            for _ in 0..2 * n {
                binom = &binom * &poly(&[1, 1]);
            }
            assert_eq!(r.lhs, binom);
            assert_eq!(r.rhs, binom);
        }
    }

    #[test]
    fn q4ft_refuses_non_distributive() {
        let m3 = Arc::new(
            crate::lattice::build_lattice(
                &["0", "a", "b", "c", "1"],
                &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
            )
            .unwrap(),
        );
        let q = WeightQuadruple::from_ints(&m3, [&[1; 5], &[1; 5], &[1; 5], &[1; 5]]).unwrap();
        let all = FamilySelection::all(&m3);
        assert!(matches!(check_q4ft(&q, &all, &all), Err(Error::NotDistributive(_))));
    }

    #[test]
    fn stronger_form() {
        let r = check_q4ft_stronger(&table()).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(1), int(1)));
        assert!(r.verdict.holds());

        let b0 = Arc::new(boolean(0).unwrap());
        let q = WeightQuadruple::from_ints(&b0, [&[2], &[3], &[1], &[5]]).unwrap();
        let r = check_q4ft_stronger(&q).unwrap();
        assert_eq!((r.lhs, r.rhs), (int(6), int(5)));
        assert!(!r.verdict.holds());

        let c = Arc::new(chain(3).unwrap());
        let q = WeightQuadruple::from_ints(&c, [&[1; 3], &[1; 3], &[1; 3], &[1; 3]]).unwrap();
        assert!(matches!(check_q4ft_stronger(&q), Err(Error::NotBoolean)));
    }

    #[test]
    fn setminus_lemma_examples() {
        let b1 = Arc::new(boolean(1).unwrap());
        let ones = WeightQuadruple::from_ints(&b1, [&[1, 1], &[1, 1], &[1, 1], &[1, 1]]).unwrap();
        let r = check_setminus_lemma(&ones).unwrap();
        assert!(r.hypothesis.holds());
        assert_eq!((r.conclusion.lhs.clone(), r.conclusion.rhs.clone()), (int(4), int(4)));

        let z = WeightQuadruple::from_ints(&b1, [&[0, 0], &[5, 7], &[0, 0], &[0, 0]]).unwrap();
        let r = check_setminus_lemma(&z).unwrap();
        assert!(r.hypothesis.holds() && r.conclusion.verdict.holds());
    }

    #[test]
    fn log_supermodularity() {
        let l = p2();
        let mu = WeightFunction::from_ints(l.clone(), &[1, 1, 1, 2]).unwrap();
        assert!(is_log_supermodular(&mu).holds());
        let bad = WeightFunction::from_ints(l, &[1, 2, 2, 1]).unwrap();
        let v = is_log_supermodular(&bad);
        let w = v.witness().unwrap();
        assert_eq!((w.element("x"), w.element("y")), (Some("{1}"), Some("{2}")));
        assert_eq!((w.lhs.clone(), w.rhs.clone()), (Side::Rational(int(4)), Side::Rational(int(1))));
        let c = Arc::new(chain(4).unwrap());
        let any = WeightFunction::from_ints(c, &[5, 0, 3, 1]).unwrap();
        assert!(is_log_supermodular(&any).holds());
    }

    #[test]
    fn monotonicity() {
        let l = p2();
        let ind = WeightFunction::from_ints(l.clone(), &[0, 1, 0, 1]).unwrap();
        assert!(is_monotone(&ind, Direction::Increasing).holds());
        assert!(!is_monotone(&ind, Direction::Decreasing).holds());
        let c = WeightFunction::from_ints(l, &[3, 3, 3, 3]).unwrap();
        assert!(is_monotone(&c, Direction::Increasing).holds());
        assert!(is_monotone(&c, Direction::Decreasing).holds());
        let b1 = Arc::new(boolean(1).unwrap());
        let f = WeightFunction::from_ints(b1, &[1, 0]).unwrap();
        let v = is_monotone(&f, Direction::Increasing);
        let w = v.witness().unwrap();
        assert_eq!((w.element("x"), w.element("y")), (Some("{}"), Some("{1}")));
    }

    #[test]
    fn qfkg_examples() {
        let b1 = Arc::new(boolean(1).unwrap());
        let mu = WeightFunction::from_ints(b1.clone(), &[1, 1]).unwrap();
        let f = WeightFunction::from_ints(b1, &[0, 1]).unwrap();
        let r = check_fkg_q(&mu, &f, &f).unwrap();
        assert_eq!(r.lhs, poly(&[0, 0, 1]));
        assert_eq!(r.rhs, poly(&[0, 1, 1]));
        assert!(r.verdict.holds() && r.fkg.verdict.holds());

        let l = p2();
        let mu = WeightFunction::from_ints(l.clone(), &[1, 1, 1, 2]).unwrap();
        let f = WeightFunction::from_ints(l.clone(), &[0, 1, 0, 1]).unwrap();
        let r = check_fkg_q(&mu, &f, &f).unwrap();
        assert_eq!(r.direction, Direction::Increasing);
        assert_eq!(r.lhs, poly(&[0, 0, 1, 4, 4]));
        assert_eq!(r.rhs, poly(&[0, 1, 4, 6, 4]));
        assert!(r.verdict.holds() && r.quadruple_hypothesis.holds());
        assert_eq!((r.fkg.lhs.clone(), r.fkg.rhs.clone()), (int(9), int(15)));

        let c = WeightFunction::from_ints(l, &[2, 2, 2, 2]).unwrap();
        let r = check_fkg_q(&mu, &c, &f).unwrap();
        assert_eq!(r.lhs, r.rhs);
    }

    #[test]
    fn qfkg_preconditions() {
        let l = p2();
        let bad_mu = WeightFunction::from_ints(l.clone(), &[1, 2, 2, 1]).unwrap();
        let inc = WeightFunction::from_ints(l.clone(), &[0, 1, 0, 1]).unwrap();
        let dec = WeightFunction::from_ints(l.clone(), &[1, 0, 1, 0]).unwrap();
        let wild = WeightFunction::from_ints(l.clone(), &[0, 1, 1, 0]).unwrap();
        let mu = WeightFunction::from_ints(l, &[1, 1, 1, 1]).unwrap();
        let premise = |r: Result<FkgReport>| match r {
            Err(Error::PreconditionFailed { premise, witness }) => {
                assert!(witness.is_some());
                premise
            }
            other => panic!("unexpected {other:?}"),
        };
        assert!(premise(check_fkg_q(&bad_mu, &inc, &inc)).contains("log-supermodular"));
        assert!(premise(check_fkg_q(&mu, &inc, &dec)).contains("opposite"));
        assert!(premise(check_fkg_q(&mu, &wild, &inc)).contains("f is not monotone"));
        assert!(premise(check_fkg_q(&mu, &inc, &wild)).contains("g is not monotone"));
        assert_eq!(check_fkg_q(&mu, &dec, &dec).unwrap().direction, Direction::Decreasing);
    }
}
