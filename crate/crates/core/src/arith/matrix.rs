use std::fmt;
use std::ops::Mul;

use super::rational::checked;

/// A 2×2 integer matrix `[[a, b], [c, d]]`, row-major.
///
/// Everything built here is a product of powers of [`Mat2::U`] and
/// [`Mat2::L`], so the determinant is always 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2 {
        a: 1,
        b: 0,
        c: 0,
        d: 1,
    };
    /// Upper elementary matrix `[[1, 1], [0, 1]]`.
    pub const U: Mat2 = Mat2 {
        a: 1,
        b: 1,
        c: 0,
        d: 1,
    };
    /// Lower elementary matrix `[[1, 0], [1, 1]]`.
    pub const L: Mat2 = Mat2 {
        a: 1,
        b: 0,
        c: 1,
        d: 1,
    };

    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2 { a, b, c, d }
    }

    /// `U^n = [[1, n], [0, 1]]`.
    pub const fn upper(n: i64) -> Self {
        Mat2 {
            a: 1,
            b: n,
            c: 0,
            d: 1,
        }
    }

    /// `L^n = [[1, 0], [n, 1]]`.
    pub const fn lower(n: i64) -> Self {
        Mat2 {
            a: 1,
            b: 0,
            c: n,
            d: 1,
        }
    }

    pub fn det(&self) -> i64 {
        checked(
            self.a
                .checked_mul(self.d)
                .and_then(|x| x.checked_sub(checked(self.b.checked_mul(self.c)))),
        )
    }

    /// Inverse of a determinant-one matrix.
    pub fn inverse_unimodular(&self) -> Self {
        debug_assert_eq!(self.det(), 1);
        Mat2 {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    /// Integer power; negative exponents use the unimodular inverse.
    pub fn pow(&self, n: i64) -> Self {
        let mut base = if n < 0 {
            self.inverse_unimodular()
        } else {
            *self
        };
        let mut e = n.unsigned_abs();
        let mut acc = Mat2::IDENTITY;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            e >>= 1;
            if e > 0 {
                base = base * base;
            }
        }
        acc
    }

    /// `M · [x, y]ᵀ`.
    pub fn apply_col(&self, (x, y): (i64, i64)) -> (i64, i64) {
        (dot(self.a, x, self.b, y), dot(self.c, x, self.d, y))
    }

    /// `[x, y] · M`.
    pub fn apply_row(&self, (x, y): (i64, i64)) -> (i64, i64) {
        (dot(x, self.a, y, self.c), dot(x, self.b, y, self.d))
    }
}

fn dot(a: i64, b: i64, c: i64, d: i64) -> i64 {
    checked(
        a.checked_mul(b)
            .and_then(|x| c.checked_mul(d).and_then(|y| x.checked_add(y))),
    )
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, o: Mat2) -> Mat2 {
        Mat2 {
            a: dot(self.a, o.a, self.b, o.c),
            b: dot(self.a, o.b, self.b, o.d),
            c: dot(self.c, o.a, self.d, o.c),
            d: dot(self.c, o.b, self.d, o.d),
        }
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}
