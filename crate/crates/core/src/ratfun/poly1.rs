//! Dense univariate polynomials with coefficients in an extension field.
//!
//! Operations take the owning [`ExtField`] explicitly; the coefficient vector
//! never stores trailing zeros, and the zero polynomial is the empty vector.

use crate::gf::{ExtField, FieldElt};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly1 {
    coeffs: Vec<FieldElt>,
}

impl Poly1 {
    pub fn zero() -> Self {
        Poly1 { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<FieldElt>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        Poly1 { coeffs }
    }

    pub fn constant(c: FieldElt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * Y^k`.
    pub fn monomial(f: &ExtField, k: usize, c: FieldElt) -> Self {
        let mut coeffs = vec![f.zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn identity(f: &ExtField) -> Self {
        Self::monomial(f, 1, f.one())
    }

    pub fn one(f: &ExtField) -> Self {
        Self::constant(f.one())
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; `None` for the zero polynomial.
    #[inline]
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[FieldElt] {
        &self.coeffs
    }

    pub fn coeff(&self, f: &ExtField, k: usize) -> FieldElt {
        self.coeffs.get(k).copied().unwrap_or_else(|| f.zero())
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self, f: &ExtField) -> FieldElt {
        self.coeffs.last().copied().unwrap_or_else(|| f.zero())
    }

    pub fn eval(&self, f: &ExtField, at: FieldElt) -> FieldElt {
        let mut acc = f.zero();
        for &c in self.coeffs.iter().rev() {
            acc = f.add(f.mul(acc, at), c);
        }
        acc
    }

    pub fn add(&self, f: &ExtField, other: &Poly1) -> Poly1 {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(f.add(self.coeff(f, k), other.coeff(f, k)));
        }
        Poly1::from_coeffs(out)
    }

    pub fn sub(&self, f: &ExtField, other: &Poly1) -> Poly1 {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(f.sub(self.coeff(f, k), other.coeff(f, k)));
        }
        Poly1::from_coeffs(out)
    }

    pub fn neg(&self, f: &ExtField) -> Poly1 {
        Poly1::from_coeffs(self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn mul(&self, f: &ExtField, other: &Poly1) -> Poly1 {
        if self.is_zero() || other.is_zero() {
            return Poly1::zero();
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly1::from_coeffs(out)
    }

    pub fn mul_scalar(&self, f: &ExtField, s: FieldElt) -> Poly1 {
        Poly1::from_coeffs(self.coeffs.iter().map(|&c| f.mul(c, s)).collect())
    }

    pub fn pow(&self, f: &ExtField, mut e: usize) -> Poly1 {
        let mut base = self.clone();
        let mut acc = Poly1::one(f);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(f, &base);
            }
            base = base.mul(f, &base);
            e >>= 1;
        }
        acc
    }

    /// Quotient and remainder; panics if `div` is zero.
    pub fn divrem(&self, f: &ExtField, div: &Poly1) -> (Poly1, Poly1) {
        let dd = div.deg().expect("division by zero polynomial");
        if self.coeffs.len() < div.coeffs.len() {
            return (Poly1::zero(), self.clone());
        }
        let lc_inv = f.inv(div.lc(f)).expect("zero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![f.zero(); self.coeffs.len() - dd];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let c = f.mul(*rem.last().unwrap(), lc_inv);
            if !c.is_zero() {
                quot[k] = c;
                for (i, &dc) in div.coeffs.iter().enumerate() {
                    rem[k + i] = f.sub(rem[k + i], f.mul(c, dc));
                }
            }
            rem.pop();
            while rem.last().map(|c| c.is_zero()).unwrap_or(false) {
                rem.pop();
            }
            if rem.is_empty() {
                break;
            }
        }
        (Poly1::from_coeffs(quot), Poly1::from_coeffs(rem))
    }

    /// Exact division; debug-asserts that the remainder vanishes.
    pub fn div_exact(&self, f: &ExtField, div: &Poly1) -> Poly1 {
        let (q, r) = self.divrem(f, div);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(f: &ExtField, a: &Poly1, b: &Poly1) -> Poly1 {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(f, &b);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    pub fn monic(&self, f: &ExtField) -> Poly1 {
        if self.is_zero() {
            return Poly1::zero();
        }
        let inv = f.inv(self.lc(f)).unwrap();
        self.mul_scalar(f, inv)
    }

    pub fn derivative(&self, f: &ExtField) -> Poly1 {
        if self.coeffs.len() <= 1 {
            return Poly1::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (k, &c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(f.mul(c, f.scalar(k as u64 % f.p())));
        }
        Poly1::from_coeffs(out)
    }

    /// For `g` with `g' = 0`, i.e. `g = u(Y^p)`: returns `u` with
    /// coefficients mapped through the inverse Frobenius.
    fn pth_root(&self, f: &ExtField) -> Poly1 {
        let p = f.p() as usize;
        let mut out = vec![f.zero(); (self.coeffs.len() + p - 1) / p];
        // c^{1/p} = c^{p^{nu-1}}
        let mut root_exp: u128 = 1;
        for _ in 0..f.nu().saturating_sub(1) {
            root_exp *= f.p() as u128;
        }
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            debug_assert_eq!(k % p, 0, "pth_root on a polynomial with nonzero derivative");
            out[k / p] = f.pow(c, root_exp);
        }
        Poly1::from_coeffs(out)
    }

    /// Squarefree decomposition `f = lc * prod g_i^{m_i}` with the `g_i`
    /// monic, squarefree and pairwise coprime. Handles inseparable parts
    /// (`g = u(Y^p)`) by recursion through the p-th root.
    pub fn squarefree_decomposition(&self, f: &ExtField) -> Vec<(Poly1, usize)> {
        let mut out = Vec::new();
        let g = self.monic(f);
        if g.is_constant() {
            return out;
        }
        let gp = g.derivative(f);
        if gp.is_zero() {
            let u = g.pth_root(f);
            for (h, m) in u.squarefree_decomposition(f) {
                out.push((h, m * f.p() as usize));
            }
            return out;
        }
        let mut c = Poly1::gcd(f, &g, &gp);
        let mut w = g.div_exact(f, &c);
        let mut i = 1usize;
        while !w.is_constant() {
            let y = Poly1::gcd(f, &w, &c);
            let z = w.div_exact(f, &y);
            if !z.is_constant() {
                out.push((z.monic(f), i));
            }
            w = y;
            c = c.div_exact(f, &w);
            i += 1;
        }
        if !c.is_constant() {
            let u = c.pth_root(f);
            for (h, m) in u.squarefree_decomposition(f) {
                out.push((h, m * f.p() as usize));
            }
        }
        out
    }

    /// Distinct roots in the given field, with multiplicities. Scans the
    /// field, so callers keep it small.
    pub fn roots(&self, f: &ExtField) -> Vec<(FieldElt, usize)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        for (g, m) in self.squarefree_decomposition(f) {
            for e in f.elements() {
                if g.eval(f, e).is_zero() {
                    out.push((e, m));
                }
            }
        }
        out.sort_by_key(|(e, _)| f.index(*e));
        out
    }

    /// Number of distinct roots over the algebraic closure
    /// (= degree of the radical).
    pub fn distinct_root_count(&self, f: &ExtField) -> usize {
        self.squarefree_decomposition(f)
            .iter()
            .map(|(g, _)| g.deg().unwrap_or(0))
            .sum()
    }

    /// Monic radical (product of the squarefree factors).
    pub fn radical(&self, f: &ExtField) -> Poly1 {
        let mut acc = Poly1::one(f);
        for (g, _) in self.squarefree_decomposition(f) {
            acc = acc.mul(f, &g);
        }
        acc
    }

    /// Resultant of two polynomials over the field.
    pub fn resultant(f: &ExtField, a: &Poly1, b: &Poly1) -> FieldElt {
        let (da, db) = match (a.deg(), b.deg()) {
            (Some(da), Some(db)) => (da, db),
            // Res(a, 0) = 0 unless the other is a nonzero constant
            (Some(0), None) | (None, Some(0)) => return f.one(),
            _ => return f.zero(),
        };
        if da == 0 && db == 0 {
            return f.one();
        }
        if da == 0 {
            return f.pow(a.lc(f), db as u128);
        }
        let mut a = a.clone();
        let mut b = b.clone();
        let mut res = f.one();
        let mut sign_flip = false;
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
            if da * db % 2 == 1 {
                sign_flip = !sign_flip;
            }
        }
        loop {
            let da = a.deg().unwrap();
            let db = match b.deg() {
                Some(d) => d,
                None => return f.zero(),
            };
            if db == 0 {
                res = f.mul(res, f.pow(b.lc(f), da as u128));
                break;
            }
            let (_, r) = a.divrem(f, &b);
            let dr = r.deg().map(|d| d as i64).unwrap_or(-1);
            // res *= lc(b)^(da - dr) * (-1)^(da*db)
            res = f.mul(res, f.pow(b.lc(f), (da as i64 - dr) as u128));
            if da * db % 2 == 1 {
                sign_flip = !sign_flip;
            }
            a = b;
            b = r;
        }
        if sign_flip {
            f.neg(res)
        } else {
            res
        }
    }
}
