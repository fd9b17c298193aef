//! Truncated power series in `t` whose coefficients are polynomials in `x`.
//!
//! Coefficients are stored as ordinary coefficients of `t^n`; the
//! exponential generating function coefficient is `n!` times the stored
//! entry and is only formed at the boundary ([`EgfSeries::egf_coeff`]).
//! Every operation is exact through the series order.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{factorial, ratio, rational, Poly, Rational};
use crate::error::{Error, Result};
use crate::family::{AlternatingFamily, BarredFamily};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EgfSeries {
    coeffs: Vec<Poly>,
}

impl EgfSeries {
    /// Series through `t^order` with the given ordinary coefficients;
    /// missing entries are zero and extra entries are dropped.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<Poly>) -> Self {
        coeffs.resize(order + 1, Poly::zero());
        EgfSeries { coeffs }
    }

    /// Series from EGF coefficients `e_n`, i.e. `Σ e_n t^n / n!`.
    pub fn from_egf(order: usize, egf: impl Fn(usize) -> Poly) -> Self {
        let coeffs = (0..=order)
            .map(|n| egf(n).scale(&Rational::new(One::one(), factorial(n))))
            .collect();
        EgfSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        EgfSeries::from_coeffs(order, Vec::new())
    }

    pub fn constant(order: usize, c: Poly) -> Self {
        EgfSeries::from_coeffs(order, vec![c])
    }

    pub fn one(order: usize) -> Self {
        EgfSeries::constant(order, Poly::one())
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        EgfSeries::from_coeffs(order, vec![Poly::zero(), Poly::one()])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Ordinary coefficient of `t^n`.
    pub fn coeff(&self, n: usize) -> &Poly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    /// `n!` times the coefficient of `t^n`.
    pub fn egf_coeff(&self, n: usize) -> Poly {
        self.coeffs[n].scale(&Rational::from_integer(factorial(n)))
    }

    pub fn truncate(&self, order: usize) -> EgfSeries {
        EgfSeries::from_coeffs(order.min(self.order()), self.coeffs.clone())
    }

    fn same_order(&self, other: &EgfSeries) -> Result<usize> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(self.order())
    }

    pub fn add(&self, other: &EgfSeries) -> Result<EgfSeries> {
        self.same_order(other)?;
        Ok(EgfSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &EgfSeries) -> Result<EgfSeries> {
        self.same_order(other)?;
        Ok(EgfSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn mul(&self, other: &EgfSeries) -> Result<EgfSeries> {
        let order = self.same_order(other)?;
        let mut coeffs = vec![Poly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        Ok(EgfSeries { coeffs })
    }

    /// Multiplies every coefficient by a polynomial in `x`.
    pub fn scale_poly(&self, p: &Poly) -> EgfSeries {
        EgfSeries { coeffs: self.coeffs.iter().map(|c| c * p).collect() }
    }

    /// `∫_0^t`, keeping the order (the `t^{order+1}` term is dropped).
    pub fn integrate(&self) -> EgfSeries {
        let order = self.order();
        let mut coeffs = Vec::with_capacity(order + 1);
        coeffs.push(Poly::zero());
        for n in 0..order {
            coeffs.push(self.coeffs[n].scale(&ratio(1, n as i64 + 1)));
        }
        EgfSeries { coeffs }
    }

    /// `d/dt`; only known through `t^{order-1}`, so the order drops by one.
    pub fn differentiate(&self) -> Result<EgfSeries> {
        let order = self.order();
        if order == 0 {
            return Err(Error::Precondition("cannot differentiate an order-0 series".into()));
        }
        Ok(EgfSeries {
            coeffs: (1..=order)
                .map(|n| self.coeffs[n].scale(&rational(n as i64)))
                .collect(),
        })
    }

    /// Substitutes a fixed value for `x` in every coefficient.
    pub fn at_x(&self, v: &Rational) -> EgfSeries {
        EgfSeries {
            coeffs: self.coeffs.iter().map(|c| Poly::constant(c.evaluate(v))).collect(),
        }
    }

    fn require_constant(&self, want: &Poly, what: &str) -> Result<()> {
        if &self.coeffs[0] != want {
            return Err(Error::Precondition(format!(
                "{what} requires constant term {want}, got {}",
                self.coeffs[0]
            )));
        }
        Ok(())
    }

    /// `1 / f` for `f(0) = 1`.
    pub fn reciprocal(&self) -> Result<EgfSeries> {
        self.require_constant(&Poly::one(), "reciprocal")?;
        let order = self.order();
        let mut g: Vec<Poly> = Vec::with_capacity(order + 1);
        g.push(Poly::one());
        for n in 1..=order {
            let mut acc = Poly::zero();
            for k in 1..=n {
                acc -= &(&self.coeffs[k] * &g[n - k]);
            }
            g.push(acc);
        }
        Ok(EgfSeries { coeffs: g })
    }

    /// `log f` for `f(0) = 1`, from `n L_n = n f_n - Σ_{k<n} k L_k f_{n-k}`.
    pub fn log1(&self) -> Result<EgfSeries> {
        self.require_constant(&Poly::one(), "log1")?;
        let order = self.order();
        let mut l: Vec<Poly> = vec![Poly::zero()];
        for n in 1..=order {
            let mut acc = self.coeffs[n].scale(&rational(n as i64));
            for k in 1..n {
                acc -= &(&l[k] * &self.coeffs[n - k]).scale(&rational(k as i64));
            }
            l.push(acc.scale(&ratio(1, n as i64)));
        }
        Ok(EgfSeries { coeffs: l })
    }

    /// `exp f` for `f(0) = 0`, from `n g_n = Σ_{k=1}^n k f_k g_{n-k}`.
    pub fn exp0(&self) -> Result<EgfSeries> {
        self.require_constant(&Poly::zero(), "exp0")?;
        let order = self.order();
        let mut g: Vec<Poly> = vec![Poly::one()];
        for n in 1..=order {
            let mut acc = Poly::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &(&self.coeffs[k] * &g[n - k]).scale(&rational(k as i64));
                }
            }
            g.push(acc.scale(&ratio(1, n as i64)));
        }
        Ok(EgfSeries { coeffs: g })
    }

    /// `f^p = exp(p log f)` for a polynomial exponent `p` in `x`.
    pub fn pow_poly(&self, p: &Poly) -> Result<EgfSeries> {
        self.log1()?.scale_poly(p).exp0()
    }

    /// `Σ c_k self^k` for `self(0) = 0`, by Horner's rule on series.
    pub fn substitute_into(&self, outer: &[Poly]) -> Result<EgfSeries> {
        self.require_constant(&Poly::zero(), "substitution")?;
        let order = self.order();
        let mut acc = EgfSeries::zero(order);
        for c in outer[..outer.len().min(order + 1)].iter().rev() {
            acc = acc.mul(self)?;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }
}

pub fn series_add(f: &EgfSeries, g: &EgfSeries) -> Result<EgfSeries> {
    f.add(g)
}

pub fn series_mul(f: &EgfSeries, g: &EgfSeries) -> Result<EgfSeries> {
    f.mul(g)
}

pub fn sin_series(order: usize) -> EgfSeries {
    EgfSeries::from_egf(order, |n| match n % 4 {
        1 => Poly::one(),
        3 => -&Poly::one(),
        _ => Poly::zero(),
    })
}

pub fn cos_series(order: usize) -> EgfSeries {
    EgfSeries::from_egf(order, |n| match n % 4 {
        0 => Poly::one(),
        2 => -&Poly::one(),
        _ => Poly::zero(),
    })
}

pub fn sec_series(order: usize) -> EgfSeries {
    cos_series(order).reciprocal().expect("cos(0) = 1")
}

pub fn tan_series(order: usize) -> EgfSeries {
    sin_series(order).mul(&sec_series(order)).expect("equal orders")
}

/// The unique `y` with `y' = p y + q` and `y(0) = y0`, through the common
/// order of `p` and `q`. Built coefficient by coefficient from
/// `(n+1) y_{n+1} = Σ_{k<=n} p_k y_{n-k} + q_n`.
pub fn solve_linear_ode(p: &EgfSeries, q: &EgfSeries, y0: &Poly) -> Result<EgfSeries> {
    let order = p.same_order(q)?;
    let mut y: Vec<Poly> = vec![y0.clone()];
    for n in 0..order {
        let mut acc = q.coeffs[n].clone();
        for k in 0..=n {
            if !p.coeffs[k].is_zero() {
                acc += &(&p.coeffs[k] * &y[n - k]);
            }
        }
        y.push(acc.scale(&ratio(1, n as i64 + 1)));
    }
    Ok(EgfSeries { coeffs: y })
}

/// Which reading of `(a)_n` the hypergeometric series uses.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pochhammer {
    /// `a (a+1) ... (a+n-1)`
    Rising,
    /// `a (a-1) ... (a-n+1)`
    Falling,
}

impl Pochhammer {
    pub const BOTH: [Pochhammer; 2] = [Pochhammer::Rising, Pochhammer::Falling];

    fn step(self) -> Rational {
        match self {
            Pochhammer::Rising => Rational::one(),
            Pochhammer::Falling => -Rational::one(),
        }
    }

    pub fn of_rational(self, a: &Rational, n: usize) -> Rational {
        let step = self.step();
        let mut acc = Rational::one();
        let mut f = a.clone();
        for _ in 0..n {
            acc *= &f;
            f += &step;
        }
        acc
    }

    pub fn of_poly(self, a: &Poly, n: usize) -> Poly {
        a.pochhammer_product(n, &self.step())
    }
}

/// `₂F₁(a, b; c; z) = Σ (a)_n (b)_n / (c)_n · z^n / n!` truncated at the
/// order of `z`, which must have zero constant term.
pub fn hyp2f1(
    a: &Rational,
    b: &Poly,
    c: &Rational,
    z: &EgfSeries,
    convention: Pochhammer,
) -> Result<EgfSeries> {
    let order = z.order();
    let mut terms = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let cn = convention.of_rational(c, n);
        if cn.is_zero() {
            return Err(Error::Precondition(format!(
                "(c)_{n} vanishes for c = {c} under the {convention:?} convention"
            )));
        }
        let scalar = convention.of_rational(a, n) / (cn * Rational::from_integer(factorial(n)));
        terms.push(convention.of_poly(b, n).scale(&scalar));
    }
    z.substitute_into(&terms)
}

/// All six `MMP(1,0,∅,0)` generating functions at one truncation order.
#[derive(Clone, Debug)]
pub struct FamilySeries {
    pub a: EgfSeries,
    pub b: EgfSeries,
    pub dbar: EgfSeries,
    pub d: EgfSeries,
    pub cbar: EgfSeries,
    pub c: EgfSeries,
}

/// Default truncation order; covers every row of the published tables.
pub const DEFAULT_ORDER: usize = 13;

/// `1 - x + x sec(t)`, the factor shared by the B and C̄ derivatives.
fn sec_factor(order: usize) -> EgfSeries {
    EgfSeries::constant(order, Poly::one_minus_x())
        .add(&sec_series(order).scale_poly(&Poly::x()))
        .expect("equal orders")
}

impl FamilySeries {
    pub fn build(order: usize) -> Result<Self> {
        let x = Poly::x();
        let one_minus_x = Poly::one_minus_x();
        let sec = sec_series(order);
        let factor = sec_factor(order);

        // A' = x tan(t) A, A(0) = 1, i.e. A = sec(t)^x.
        let a = sec.pow_poly(&x)?;
        // B' = sec^x (1 - x + x sec), B(0) = 0.
        let b = solve_linear_ode(&EgfSeries::zero(order), &a.mul(&factor)?, &Poly::zero())?;
        // D̄' = x + x tan(t) D̄, D̄(0) = 0.
        let dbar = solve_linear_ode(
            &tan_series(order).scale_poly(&x),
            &EgfSeries::constant(order, x.clone()),
            &Poly::zero(),
        )?;
        let d = dbar.add(&a.integrate().scale_poly(&one_minus_x))?;
        let cos_x = cos_series(order).pow_poly(&x)?;
        let inner = a.mul(&factor)?.mul(&cos_x.integrate())?.scale_poly(&x);
        let cbar = EgfSeries::one(order).add(&inner.integrate())?;
        let c = cbar.add(&b.integrate().scale_poly(&one_minus_x))?;
        Ok(FamilySeries { a, b, dbar, d, cbar, c })
    }

    pub fn family(&self, fam: AlternatingFamily) -> &EgfSeries {
        match fam {
            AlternatingFamily::A => &self.a,
            AlternatingFamily::B => &self.b,
            AlternatingFamily::C => &self.c,
            AlternatingFamily::D => &self.d,
        }
    }

    pub fn barred(&self, fam: BarredFamily) -> &EgfSeries {
        match fam {
            BarredFamily::DBar => &self.dbar,
            BarredFamily::CBar => &self.cbar,
        }
    }
}

pub fn family_series(fam: AlternatingFamily, order: usize) -> Result<EgfSeries> {
    Ok(FamilySeries::build(order)?.family(fam).clone())
}

/// Closed forms of the generating functions, assembled from elementary
/// series independently of the recursions.
pub mod closed_form {
    use super::*;

    /// `x sec(t)^x ∫_0^t cos(z)^x dz`.
    pub fn dbar(order: usize) -> Result<EgfSeries> {
        let x = Poly::x();
        let sec_x = sec_series(order).pow_poly(&x)?;
        let cos_x = cos_series(order).pow_poly(&x)?;
        Ok(sec_x.mul(&cos_x.integrate())?.scale_poly(&x))
    }

    /// `x sec(t)^x ∫_0^t cos(z)^x dz + (1-x) ∫_0^t sec(z)^x dz`.
    pub fn d(order: usize) -> Result<EgfSeries> {
        let sec_x = sec_series(order).pow_poly(&Poly::x())?;
        dbar(order)?.add(&sec_x.integrate().scale_poly(&Poly::one_minus_x()))
    }

    /// The hypergeometric closed form of B:
    /// `sin cos (1-x+x sec) / (x + (1-x) cos)` times
    /// `(1-x) ₂F₁(1/2, (1+x)/2; 3/2; sin²) + x ₂F₁(1/2, (2+x)/2; 3/2; sin²)`.
    pub fn b(order: usize, convention: Pochhammer) -> Result<EgfSeries> {
        let x = Poly::x();
        let one_minus_x = Poly::one_minus_x();
        let sin = sin_series(order);
        let cos = cos_series(order);
        let denom = EgfSeries::constant(order, x.clone()).add(&cos.scale_poly(&one_minus_x))?;
        let prefactor = sin.mul(&cos)?.mul(&sec_factor(order))?.mul(&denom.reciprocal()?)?;

        let half = ratio(1, 2);
        let three_halves = ratio(3, 2);
        let z = sin.mul(&sin)?;
        let b1 = Poly::new(vec![half.clone(), half.clone()]);
        let b2 = Poly::new(vec![rational(1), half.clone()]);
        let f1 = hyp2f1(&half, &b1, &three_halves, &z, convention)?;
        let f2 = hyp2f1(&half, &b2, &three_halves, &z, convention)?;
        let bracket = f1.scale_poly(&one_minus_x).add(&f2.scale_poly(&x))?;
        prefactor.mul(&bracket)
    }

    /// `C̄ + (1-x) ∫ B` where the inner integrand is `cos(y)^x` when
    /// `with_exponent` holds and plain `cos(y)` otherwise.
    pub fn c(order: usize, b: &EgfSeries, with_exponent: bool) -> Result<EgfSeries> {
        let x = Poly::x();
        let sec_x = sec_series(order).pow_poly(&x)?;
        let inner_base = if with_exponent {
            cos_series(order).pow_poly(&x)?
        } else {
            cos_series(order)
        };
        let integrand = sec_x.mul(&sec_factor(order))?.mul(&inner_base.integrate())?.scale_poly(&x);
        EgfSeries::one(order)
            .add(&integrand.integrate())?
            .add(&b.integrate().scale_poly(&Poly::one_minus_x()))
    }
}

/// Machine-readable series dump: EGF coefficients keyed by the power of `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesRecord {
    pub family: String,
    pub order: usize,
    pub coeffs: BTreeMap<usize, Poly>,
}

impl SeriesRecord {
    pub fn new(family: impl Into<String>, series: &EgfSeries) -> Self {
        SeriesRecord {
            family: family.into(),
            order: series.order(),
            coeffs: (0..=series.order()).map(|n| (n, series.egf_coeff(n))).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const N: usize = 13;

    fn egf_ints(s: &EgfSeries) -> Vec<Poly> {
        (0..=s.order()).map(|n| s.egf_coeff(n)).collect()
    }

    #[test]
    fn sec_cos_are_reciprocal() {
        let prod = sec_series(N).mul(&cos_series(N)).unwrap();
        assert_eq!(prod, EgfSeries::one(N));
        let f = tan_series(N);
        assert_eq!(f.mul(&EgfSeries::one(N)).unwrap(), f);
    }

    #[test]
    fn tan_times_cos_is_sin() {
        assert_eq!(tan_series(N).mul(&cos_series(N)).unwrap(), sin_series(N));
    }

    #[test]
    fn order_mismatch_is_an_error() {
        assert_eq!(
            sin_series(4).mul(&sin_series(5)),
            Err(Error::OrderMismatch { left: 4, right: 5 })
        );
        assert!(sin_series(4).add(&sin_series(3)).is_err());
    }

    #[test]
    fn integrate_and_differentiate() {
        assert_eq!(EgfSeries::one(N).integrate(), EgfSeries::t(N));
        let f = sec_series(N);
        assert_eq!(f.integrate().differentiate().unwrap(), f.truncate(N - 1));
        let sec2 = sec_series(N).mul(&sec_series(N)).unwrap();
        assert_eq!(sec2.integrate(), tan_series(N));
    }

    #[test]
    fn andre_numbers() {
        let sec = egf_ints(&sec_series(N));
        let tan = egf_ints(&tan_series(N));
        let secant = [1, 1, 5, 61, 1385, 50521, 2702765];
        let tangent = [1, 2, 16, 272, 7936, 353792, 22368256];
        for (k, &v) in secant.iter().enumerate() {
            assert_eq!(sec[2 * k], Poly::from_ints(&[v]));
        }
        for (k, &v) in tangent.iter().enumerate() {
            assert_eq!(tan[2 * k + 1], Poly::from_ints(&[v]));
        }
    }

    #[test]
    fn log_exp_basics() {
        assert_eq!(EgfSeries::one(N).log1().unwrap(), EgfSeries::zero(N));
        assert_eq!(EgfSeries::zero(N).exp0().unwrap(), EgfSeries::one(N));
        let f = sec_series(N);
        assert_eq!(f.log1().unwrap().exp0().unwrap(), f);
        assert!(sin_series(N).log1().is_err());
        assert!(cos_series(N).exp0().is_err());
        assert!(sin_series(N).reciprocal().is_err());
    }

    #[test]
    fn powers() {
        let a = sec_series(N).pow_poly(&Poly::x()).unwrap();
        assert_eq!(a.egf_coeff(2), Poly::x());
        assert_eq!(a.egf_coeff(4), Poly::from_ints(&[0, 2, 3]));
        assert_eq!(sec_series(N).pow_poly(&Poly::zero()).unwrap(), EgfSeries::one(N));
        let inv = cos_series(N).pow_poly(&Poly::x()).unwrap();
        assert_eq!(a.mul(&inv).unwrap(), EgfSeries::one(N));
        assert_eq!(a.at_x(&rational(1)), sec_series(N));
    }

    #[test]
    fn ode_examples() {
        let x = Poly::x();
        let a = solve_linear_ode(
            &tan_series(N).scale_poly(&x),
            &EgfSeries::zero(N),
            &Poly::one(),
        )
        .unwrap();
        assert_eq!(a, sec_series(N).pow_poly(&x).unwrap());

        let fs = FamilySeries::build(N).unwrap();
        assert_eq!(fs.b.egf_coeff(5), Poly::from_ints(&[0, 7, 9]));
        assert_eq!(fs.dbar.egf_coeff(3), Poly::from_ints(&[0, 0, 2]));
        assert_eq!(fs.dbar, closed_form::dbar(N).unwrap());
    }

    #[test]
    fn family_rows() {
        let fs = FamilySeries::build(N).unwrap();
        assert_eq!(fs.d.egf_coeff(7), Poly::from_ints(&[0, 16, 110, 113, 33]));
        assert_eq!(fs.c.egf_coeff(6), Poly::from_ints(&[0, 7, 35, 19]));
        assert_eq!(fs.a.at_x(&rational(1)), sec_series(N));
        assert_eq!(fs.d, closed_form::d(N).unwrap());
    }

    #[test]
    fn hypergeometric_trivial_and_arctangent() {
        let z = EgfSeries::t(N).mul(&EgfSeries::t(N)).unwrap();
        let f = hyp2f1(&ratio(1, 2), &Poly::zero(), &ratio(3, 2), &z, Pochhammer::Rising).unwrap();
        assert_eq!(f, EgfSeries::one(N));

        // t ₂F₁(1/2, 1; 3/2; -t²) = arctan t = ∫ 1/(1+t²).
        let minus_t2 = z.scale_poly(&-&Poly::one());
        let f = hyp2f1(&ratio(1, 2), &Poly::one(), &ratio(3, 2), &minus_t2, Pochhammer::Rising).unwrap();
        let arctan = EgfSeries::one(N).add(&z).unwrap().reciprocal().unwrap().integrate();
        assert_eq!(EgfSeries::t(N).mul(&f).unwrap(), arctan);

        // sin t ₂F₁(1/2, 1; 3/2; sin² t) = artanh(sin t) = ∫ sec.
        let s = sin_series(N);
        let sin2 = s.mul(&s).unwrap();
        let f = hyp2f1(&ratio(1, 2), &Poly::one(), &ratio(3, 2), &sin2, Pochhammer::Rising).unwrap();
        assert_eq!(s.mul(&f).unwrap(), sec_series(N).integrate());
    }

    #[test]
    fn hypergeometric_rejects_bad_inputs() {
        let z = EgfSeries::t(4);
        assert!(hyp2f1(&ratio(1, 2), &Poly::one(), &rational(-2), &z, Pochhammer::Rising).is_err());
        assert!(hyp2f1(&ratio(1, 2), &Poly::one(), &rational(2), &z, Pochhammer::Falling).is_err());
        assert!(hyp2f1(&ratio(1, 2), &Poly::one(), &ratio(3, 2), &EgfSeries::one(4), Pochhammer::Rising).is_err());
    }

    #[test]
    fn substitution_order_checks() {
        let z = EgfSeries::t(6);
        let geom = vec![Poly::one(); 10];
        let s = z.substitute_into(&geom).unwrap();
        for n in 0..=6 {
            assert_eq!(s.coeff(n), &Poly::one());
        }
    }

    #[test]
    fn series_record_json() {
        let rec = SeriesRecord::new("A", &sec_series(4).pow_poly(&Poly::x()).unwrap());
        let text = serde_json::to_string(&rec).unwrap();
        assert_eq!(
            text,
            r#"{"family":"A","order":4,"coeffs":{"0":["1"],"1":[],"2":["0","1"],"3":[],"4":["0","2","3"]}}"#
        );
    }
}
