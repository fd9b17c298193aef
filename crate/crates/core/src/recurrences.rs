//! Euler zigzag numbers and the convolution recursions for the
//! `MMP(1,0,∅,0)` families, obtained by conditioning on the position of 1.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{Poly, Rational};
use crate::error::{Error, Result};
use crate::family::{AlternatingFamily, BarredFamily};

/// `E_0..=E_max`, computed with the Seidel–Entringer boustrophedon
/// triangle: `E(n,0) = 0`, `E(n,k) = E(n,k-1) + E(n-1,n-k)`, `E_n = E(n,n)`.
#[derive(Clone, Debug)]
pub struct ZigzagTable {
    values: Vec<BigInt>,
}

impl ZigzagTable {
    pub fn up_to(max: usize) -> Self {
        let mut values = vec![BigInt::one()];
        let mut row = vec![BigInt::one()];
        for n in 1..=max {
            let mut next = Vec::with_capacity(n + 1);
            next.push(BigInt::zero());
            for k in 1..=n {
                let v = &next[k - 1] + &row[n - k];
                next.push(v);
            }
            values.push(next[n].clone());
            row = next;
        }
        ZigzagTable { values }
    }

    pub fn max(&self) -> usize {
        self.values.len() - 1
    }

    /// `E_n`; panics beyond the table bound.
    pub fn get(&self, n: usize) -> &BigInt {
        &self.values[n]
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

/// Number of alternating permutations of length `n` (either class).
pub fn zigzag(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::EmptyLength);
    }
    Ok(ZigzagTable::up_to(n).get(n).clone())
}

/// Pascal's triangle, rows `0..=max`.
#[derive(Clone, Debug)]
pub struct Binomials {
    rows: Vec<Vec<BigInt>>,
}

impl Binomials {
    pub fn up_to(max: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for n in 1..=max {
            let prev = &rows[n - 1];
            let mut row = vec![BigInt::one(); n + 1];
            for k in 1..n {
                row[k] = &prev[k - 1] + &prev[k];
            }
            rows.push(row);
        }
        Binomials { rows }
    }

    pub fn get(&self, n: usize, k: usize) -> BigInt {
        self.rows[n].get(k).cloned().unwrap_or_default()
    }
}

/// Memoized `MMP(1,0,∅,0)` polynomials, indexed by table row `n`:
/// `A_{2n}`, `B_{2n+1}`, `D̄_{2n+1}`, `D_{2n+1}`, `C̄_{2n}`, `C_{2n}`.
#[derive(Clone, Debug)]
pub struct FamilyTable {
    zigzag: ZigzagTable,
    a: Vec<Poly>,
    b: Vec<Poly>,
    dbar: Vec<Poly>,
    d: Vec<Poly>,
    cbar: Vec<Poly>,
    c: Vec<Poly>,
}

fn weight(binom: BigInt, count: &BigInt) -> Rational {
    Rational::from_integer(binom * count)
}

impl FamilyTable {
    /// Every family up to length `max_len` (rows `0..=max_len / 2`).
    pub fn up_to_len(max_len: usize) -> Self {
        let rows = max_len / 2;
        let zigzag = ZigzagTable::up_to(2 * rows + 1);
        let binom = Binomials::up_to(2 * rows + 1);
        let e = |k: usize| zigzag.get(k).clone();
        let x = Poly::x();
        let one_minus_x = Poly::one_minus_x();

        let mut a = vec![Poly::one()];
        for n in 1..=rows {
            let mut sum = Poly::zero();
            for k in 0..n {
                sum += &a[k].scale(&weight(binom.get(2 * n - 1, 2 * k), &e(2 * n - 2 * k - 1)));
            }
            a.push(&x * &sum);
        }

        let mut b = Vec::with_capacity(rows + 1);
        for n in 0..=rows {
            let mut sum = Poly::zero();
            for k in 0..n {
                sum += &a[k].scale(&weight(binom.get(2 * n, 2 * k), &e(2 * n - 2 * k)));
            }
            b.push(&a[n] + &(&x * &sum));
        }

        let mut dbar = vec![x.clone()];
        for n in 1..=rows {
            let mut sum = Poly::zero();
            for k in 1..=n {
                sum += &dbar[k - 1].scale(&weight(binom.get(2 * n, 2 * k - 1), &e(2 * n - 2 * k + 1)));
            }
            dbar.push(&x * &sum);
        }

        let d: Vec<Poly> = (0..=rows).map(|n| &dbar[n] + &(&one_minus_x * &a[n])).collect();

        let mut cbar = vec![Poly::one()];
        for n in 1..=rows {
            let mut sum = Poly::zero();
            for k in 1..n {
                sum += &dbar[k - 1].scale(&weight(binom.get(2 * n - 1, 2 * k - 1), &e(2 * n - 2 * k)));
            }
            cbar.push(&dbar[n - 1] + &(&x * &sum));
        }

        let mut c = vec![Poly::one()];
        for n in 1..=rows {
            c.push(&cbar[n] + &(&one_minus_x * &b[n - 1]));
        }

        FamilyTable { zigzag, a, b, dbar, d, cbar, c }
    }

    pub fn rows(&self) -> usize {
        self.a.len() - 1
    }

    pub fn zigzag(&self) -> &ZigzagTable {
        &self.zigzag
    }

    fn row(&self, len: usize, even: bool) -> Result<usize> {
        let n = if even { len / 2 } else { (len - 1) / 2 };
        if n > self.rows() {
            return Err(Error::Precondition(format!(
                "length {len} beyond the table (rows 0..={})",
                self.rows()
            )));
        }
        Ok(n)
    }

    /// Polynomial of `fam` at length `len` (`len = 0` gives the constant
    /// term 1 of the even families).
    pub fn family(&self, fam: AlternatingFamily, len: usize) -> Result<&Poly> {
        fam.check_len(len)?;
        let n = self.row(len, fam.is_even())?;
        Ok(match fam {
            AlternatingFamily::A => &self.a[n],
            AlternatingFamily::B => &self.b[n],
            AlternatingFamily::C => &self.c[n],
            AlternatingFamily::D => &self.d[n],
        })
    }

    pub fn barred(&self, fam: BarredFamily, len: usize) -> Result<&Poly> {
        fam.check_len(len)?;
        let n = self.row(len, fam.is_even())?;
        Ok(match fam {
            BarredFamily::DBar => &self.dbar[n],
            BarredFamily::CBar => &self.cbar[n],
        })
    }
}

/// One polynomial of a family; builds the table up to `len`.
pub fn family_poly(fam: AlternatingFamily, len: usize) -> Result<Poly> {
    fam.check_len(len)?;
    FamilyTable::up_to_len(len).family(fam, len).cloned()
}

pub fn barred_poly(fam: BarredFamily, len: usize) -> Result<Poly> {
    fam.check_len(len)?;
    FamilyTable::up_to_len(len).barred(fam, len).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use AlternatingFamily::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn zigzag_values() {
        assert_eq!(zigzag(4).unwrap(), BigInt::from(5));
        assert_eq!(zigzag(1).unwrap(), BigInt::from(1));
        assert_eq!(zigzag(9).unwrap(), BigInt::from(7936));
        assert!(zigzag(0).is_err());
        let t = ZigzagTable::up_to(12);
        let want = [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792, 2702765];
        assert_eq!(t.values(), want.map(BigInt::from).as_slice());
    }

    #[test]
    fn table_rows() {
        assert_eq!(family_poly(A, 8).unwrap(), p(&[0, 272, 588, 420, 105]));
        assert_eq!(family_poly(B, 1).unwrap(), Poly::one());
        assert_eq!(
            family_poly(C, 12).unwrap(),
            p(&[0, 58457, 712579, 1079747, 652452, 180240, 19290])
        );
        assert_eq!(family_poly(D, 7).unwrap(), p(&[0, 16, 110, 113, 33]));
        assert_eq!(family_poly(C, 2).unwrap(), Poly::one());
    }

    #[test]
    fn barred_rows() {
        assert_eq!(barred_poly(BarredFamily::DBar, 3).unwrap(), p(&[0, 0, 2]));
        assert_eq!(barred_poly(BarredFamily::DBar, 5).unwrap(), p(&[0, 0, 8, 8]));
        assert_eq!(barred_poly(BarredFamily::CBar, 2).unwrap(), Poly::x());
    }

    #[test]
    fn parity_is_checked() {
        assert!(matches!(family_poly(A, 3), Err(Error::ParityMismatch { .. })));
        assert!(matches!(barred_poly(BarredFamily::CBar, 5), Err(Error::ParityMismatch { .. })));
        let t = FamilyTable::up_to_len(6);
        assert!(t.family(B, 9).is_err());
    }

    #[test]
    fn rows_sum_to_zigzag() {
        let t = FamilyTable::up_to_len(14);
        let one = Rational::one();
        for len in 1..=14 {
            let e = Rational::from_integer(t.zigzag().get(len).clone());
            let fams: &[AlternatingFamily] = if len % 2 == 0 { &[A, C] } else { &[B, D] };
            for &f in fams {
                assert_eq!(t.family(f, len).unwrap().evaluate(&one), e, "{f} at {len}");
            }
        }
    }
}
