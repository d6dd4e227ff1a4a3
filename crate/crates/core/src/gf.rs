//! Arithmetic in `F_p` and its extensions `F_{p^nu}`, `nu <= 4`.
//!
//! Extension fields are modeled as `F_p[X]/(m)` for the lexicographically
//! least monic irreducible `m` of degree `nu` (a custom modulus can be
//! supplied for basis-independence experiments). Elements are coordinate
//! vectors in the power basis, characters are evaluated in double-precision
//! complex arithmetic:
//!
//! - `psi(e) = exp(2 pi i Tr(e) / p)` (additive character, canonical);
//! - `chi(e, d) = exp(2 pi i d log_g(e) / (q - 1))`, with `chi(0, d) = 0`
//!   (Kummer convention), where `g` is the stored generator.
//!
//! Base fields are odd primes `p < 2^31`; the field order is capped at
//! `2^40` so that element indexing and the factorization of `q - 1` stay in
//! machine words. Log/exp tables are built lazily and only for `q <= 2^24`.

use std::f64::consts::TAU;
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::{Error, Result};

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u128 = 1 << 40;
/// Largest field order for which discrete-log tables are built.
pub const MAX_LOG_TABLE_ORDER: u128 = 1 << 24;

const MAX_DEG: usize = 4;

/// An odd prime modulus, verified at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p < (1 << 31) && p > 2 && is_prime(p) {
            Ok(PrimeField { p })
        } else {
            Err(Error::NotOddPrime(p))
        }
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }
}

/// Deterministic Miller-Rabin, exact for all `n < 3.3 * 10^24`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'outer: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

#[inline]
fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn mod_pow(mut a: u64, mut e: u64, n: u64) -> u64 {
    let mut r = 1 % n;
    a %= n;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, n);
        }
        a = mul_mod(a, a, n);
        e >>= 1;
    }
    r
}

fn trial_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d as u128 * d as u128 <= n as u128 {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// An element of an extension field, as coordinates in the power basis.
///
/// Coordinates beyond the field degree are kept at zero so that equality and
/// hashing are structural.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElt {
    nu: u8,
    c: [u64; MAX_DEG],
}

impl FieldElt {
    #[inline]
    pub fn coeffs(&self) -> &[u64] {
        &self.c[..self.nu as usize]
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&v| v == 0)
    }

    /// Constant coordinate; the full residue for prime-field elements.
    #[inline]
    pub fn constant_coeff(&self) -> u64 {
        self.c[0]
    }

    /// True when the element lies in the prime field.
    #[inline]
    pub fn is_scalar(&self) -> bool {
        self.c[1..].iter().all(|&v| v == 0)
    }
}

/// The field `F_{p^nu} = F_p[X]/(m)` together with its evaluation tables.
///
/// Immutable after construction (tables are built lazily behind `OnceLock`),
/// hence safe to share across parallel workers.
pub struct ExtField {
    p: u64,
    nu: usize,
    q: u64,
    modulus: Vec<u64>,
    /// `X^{nu+k} mod m` for `k in 0..nu-1`.
    reduction: Vec<[u64; MAX_DEG]>,
    /// `Tr(X^i) mod p` for `i in 0..nu`.
    trace_basis: [u64; MAX_DEG],
    generator: FieldElt,
    /// `e(k/p)` for `k < p`, built when `p` is small.
    psi_roots: Option<Vec<Complex64>>,
    /// `(log, exp)` tables relative to `generator`, `q <= 2^24` only.
    dlog: OnceLock<Result<(Vec<u32>, Vec<u32>)>>,
}

impl std::fmt::Debug for ExtField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ExtField")
            .field("p", &self.p)
            .field("nu", &self.nu)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl ExtField {
    /// Builds `F_{p^nu}` with the lexicographically least monic irreducible
    /// modulus of degree `nu`. Reproducible across runs.
    pub fn new(p: u64, nu: usize) -> Result<Self> {
        let pf = PrimeField::new(p)?;
        let modulus = least_irreducible(pf.p, nu)?;
        Self::with_modulus(p, &modulus)
    }

    /// Builds the field from an explicit monic irreducible modulus
    /// (coefficients low-to-high, length `nu + 1`).
    pub fn with_modulus(p: u64, modulus: &[u64]) -> Result<Self> {
        let pf = PrimeField::new(p)?;
        let p = pf.p;
        let nu = modulus.len().saturating_sub(1);
        if nu == 0 || nu > MAX_DEG {
            return Err(Error::BadModulus(nu));
        }
        let modulus: Vec<u64> = modulus.iter().map(|&c| c % p).collect();
        if modulus[nu] != 1 {
            return Err(Error::BadModulus(nu));
        }
        let mut q: u128 = 1;
        for _ in 0..nu {
            q *= p as u128;
        }
        if q > MAX_FIELD_ORDER {
            return Err(Error::FieldTooLarge(q, MAX_FIELD_ORDER));
        }
        if !is_irreducible(p, &modulus) {
            return Err(Error::BadModulus(nu));
        }
        let q = q as u64;

        // X^{nu+k} mod m, by shifting and reducing once per step.
        let mut reduction = Vec::with_capacity(nu.saturating_sub(1));
        let mut cur = [0u64; MAX_DEG]; // X^nu mod m = -(m - X^nu)
        for i in 0..nu {
            cur[i] = (p - modulus[i]) % p;
        }
        reduction.push(cur);
        for _ in 1..nu {
            let mut next = [0u64; MAX_DEG];
            let top = cur[nu - 1];
            for i in (1..nu).rev() {
                next[i] = cur[i - 1];
            }
            for i in 0..nu {
                next[i] = (next[i] + top * reduction[0][i]) % p;
            }
            reduction.push(next);
            cur = next;
        }

        let psi_roots = if p <= (1 << 20) {
            Some(
                (0..p)
                    .map(|k| Complex64::from_polar(1.0, TAU * k as f64 / p as f64))
                    .collect(),
            )
        } else {
            None
        };

        let mut field = ExtField {
            p,
            nu,
            q,
            modulus,
            reduction,
            trace_basis: [0; MAX_DEG],
            generator: FieldElt {
                nu: nu as u8,
                c: [0; MAX_DEG],
            },
            psi_roots,
            dlog: OnceLock::new(),
        };

        // Tr(X^i) = sum of Frobenius orbits of X^i; trace is F_p-linear in
        // the coordinates, so these nu residues evaluate it everywhere.
        for i in 0..nu {
            let mut b = field.zero();
            b.c[i] = 1;
            let mut acc = field.zero();
            let mut conj = b;
            for _ in 0..nu {
                acc = field.add(acc, conj);
                conj = field.pow(conj, p as u128);
            }
            debug_assert!(acc.is_scalar());
            field.trace_basis[i] = acc.c[0];
        }

        field.generator = field.find_generator()?;
        Ok(field)
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn nu(&self) -> usize {
        self.nu
    }

    /// Field order `q = p^nu`.
    #[inline]
    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn generator(&self) -> FieldElt {
        self.generator
    }

    #[inline]
    pub fn zero(&self) -> FieldElt {
        FieldElt {
            nu: self.nu as u8,
            c: [0; MAX_DEG],
        }
    }

    #[inline]
    pub fn one(&self) -> FieldElt {
        self.scalar(1)
    }

    /// Embeds a residue of `F_p`.
    #[inline]
    pub fn scalar(&self, v: u64) -> FieldElt {
        let mut c = [0u64; MAX_DEG];
        c[0] = v % self.p;
        FieldElt {
            nu: self.nu as u8,
            c,
        }
    }

    /// Embeds a signed integer.
    pub fn from_int(&self, v: i64) -> FieldElt {
        let p = self.p as i64;
        self.scalar(v.rem_euclid(p) as u64)
    }

    /// The class of `X` (equals the scalar 0-free part for `nu = 1`).
    pub fn x_elt(&self) -> FieldElt {
        let mut e = self.zero();
        if self.nu > 1 {
            e.c[1] = 1;
        } else {
            // In F_p[X]/(X + c) the class of X is -c.
            e.c[0] = (self.p - self.modulus[0]) % self.p;
        }
        e
    }

    fn check(&self, e: FieldElt) -> Result<()> {
        if e.nu as usize == self.nu {
            Ok(())
        } else {
            Err(Error::DegreeMismatch {
                elt: e.nu as usize,
                field: self.nu,
            })
        }
    }

    /// Index of an element in `0..q` (base-`p` digits of the coordinates).
    #[inline]
    pub fn index(&self, e: FieldElt) -> u64 {
        let mut idx = 0u64;
        for i in (0..self.nu).rev() {
            idx = idx * self.p + e.c[i];
        }
        idx
    }

    /// Inverse of [`ExtField::index`].
    #[inline]
    pub fn from_index(&self, mut idx: u64) -> FieldElt {
        let mut e = self.zero();
        for i in 0..self.nu {
            e.c[i] = idx % self.p;
            idx /= self.p;
        }
        e
    }

    /// Iterator over all field elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElt> + '_ {
        (0..self.q).map(move |i| self.from_index(i))
    }

    #[inline]
    pub fn add(&self, a: FieldElt, b: FieldElt) -> FieldElt {
        let mut c = [0u64; MAX_DEG];
        for i in 0..self.nu {
            let s = a.c[i] + b.c[i];
            c[i] = if s >= self.p { s - self.p } else { s };
        }
        FieldElt {
            nu: self.nu as u8,
            c,
        }
    }

    #[inline]
    pub fn sub(&self, a: FieldElt, b: FieldElt) -> FieldElt {
        let mut c = [0u64; MAX_DEG];
        for i in 0..self.nu {
            c[i] = if a.c[i] >= b.c[i] {
                a.c[i] - b.c[i]
            } else {
                a.c[i] + self.p - b.c[i]
            };
        }
        FieldElt {
            nu: self.nu as u8,
            c,
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElt) -> FieldElt {
        self.sub(self.zero(), a)
    }

    pub fn mul(&self, a: FieldElt, b: FieldElt) -> FieldElt {
        let nu = self.nu;
        if nu == 1 {
            let mut e = self.zero();
            e.c[0] = mul_mod(a.c[0], b.c[0], self.p);
            return e;
        }
        let mut prod = [0u128; 2 * MAX_DEG - 1];
        for i in 0..nu {
            if a.c[i] == 0 {
                continue;
            }
            for j in 0..nu {
                prod[i + j] += a.c[i] as u128 * b.c[j] as u128;
            }
        }
        let mut c = [0u64; MAX_DEG];
        for (i, slot) in c.iter_mut().enumerate().take(nu) {
            *slot = (prod[i] % self.p as u128) as u64;
        }
        for k in 0..nu - 1 {
            let hi = (prod[nu + k] % self.p as u128) as u64;
            if hi == 0 {
                continue;
            }
            let row = &self.reduction[k];
            for i in 0..nu {
                c[i] = (c[i] + mul_mod(hi, row[i], self.p)) % self.p;
            }
        }
        FieldElt {
            nu: self.nu as u8,
            c,
        }
    }

    pub fn pow(&self, base: FieldElt, mut e: u128) -> FieldElt {
        let mut r = self.one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FieldElt) -> Option<FieldElt> {
        if a.is_zero() {
            return None;
        }
        if let Some(Ok((log, exp))) = self.dlog.get() {
            let k = log[self.index(a) as usize] as u64;
            let inv_idx = exp[((self.q - 1 - k) % (self.q - 1)) as usize];
            return Some(self.from_index(inv_idx as u64));
        }
        Some(self.pow(a, (self.q - 2) as u128))
    }

    pub fn frobenius(&self, a: FieldElt) -> FieldElt {
        self.pow(a, self.p as u128)
    }

    /// Absolute trace `Tr(e) = e + e^p + ... + e^{p^{nu-1}}`, as a residue
    /// mod `p`.
    pub fn trace_to_prime(&self, e: FieldElt) -> Result<u64> {
        self.check(e)?;
        let mut t: u128 = 0;
        for i in 0..self.nu {
            t += e.c[i] as u128 * self.trace_basis[i] as u128;
        }
        Ok((t % self.p as u128) as u64)
    }

    /// Absolute norm `N(e) = e^{(q-1)/(p-1)}`, as a residue mod `p`.
    pub fn norm_to_prime(&self, e: FieldElt) -> Result<u64> {
        self.check(e)?;
        if e.is_zero() {
            return Ok(0);
        }
        let n = self.pow(e, ((self.q - 1) / (self.p - 1)) as u128);
        debug_assert!(n.is_scalar());
        Ok(n.c[0])
    }

    #[inline]
    fn psi_root(&self, k: u64) -> Complex64 {
        match &self.psi_roots {
            Some(t) => t[k as usize],
            None => Complex64::from_polar(1.0, TAU * k as f64 / self.p as f64),
        }
    }

    /// Additive character `psi(e) = e(Tr(e)/p)`; a complex unit.
    pub fn psi(&self, e: FieldElt) -> Result<Complex64> {
        Ok(self.psi_root(self.trace_to_prime(e)?))
    }

    /// Builds (or returns) the discrete-log table. Entry `log[index(e)]` is
    /// the exponent of `e` with respect to the stored generator; the paired
    /// `exp` table inverts it.
    pub fn discrete_log_table(&self) -> Result<(&[u32], &[u32])> {
        let res = self.dlog.get_or_init(|| {
            if self.q as u128 > MAX_LOG_TABLE_ORDER {
                return Err(Error::FieldTooLarge(self.q as u128, MAX_LOG_TABLE_ORDER));
            }
            let q = self.q as usize;
            let mut log = vec![u32::MAX; q];
            let mut exp = vec![0u32; q - 1];
            let mut cur = self.one();
            for k in 0..(q - 1) as u64 {
                let idx = self.index(cur);
                log[idx as usize] = k as u32;
                exp[k as usize] = idx as u32;
                cur = self.mul(cur, self.generator);
            }
            Ok((log, exp))
        });
        match res {
            Ok((log, exp)) => Ok((log.as_slice(), exp.as_slice())),
            Err(e) => Err(clone_err(e)),
        }
    }

    /// Discrete log of a nonzero element w.r.t. the generator.
    pub fn dlog(&self, e: FieldElt) -> Result<Option<u64>> {
        if e.is_zero() {
            return Ok(None);
        }
        let (log, _) = self.discrete_log_table()?;
        Ok(Some(log[self.index(e) as usize] as u64))
    }

    /// Multiplicative character of index `d`: `chi(g^k) = e(dk/(q-1))`,
    /// `chi(0) = 0` (Kummer convention).
    pub fn chi(&self, e: FieldElt, d: u64) -> Result<Complex64> {
        if e.is_zero() {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let (log, _) = self.discrete_log_table()?;
        let k = log[self.index(e) as usize] as u128;
        let m = self.q as u128 - 1;
        let ang = (d as u128 % m) * k % m;
        Ok(Complex64::from_polar(1.0, TAU * ang as f64 / m as f64))
    }

    /// Lifts a base-field character index `d` (taken w.r.t. the canonical
    /// generator of `F_p`, i.e. the least primitive root) to an index `D`
    /// on this field with `chi_D = chi_d compose Norm`.
    pub fn lift_character_index(&self, d: u64) -> Result<u64> {
        if self.nu == 1 {
            // Indices here are w.r.t. this field's generator, which is the
            // canonical least primitive root.
            return Ok(d % (self.q - 1));
        }
        let g0 = least_primitive_root(self.p)?;
        let n = self.norm_to_prime(self.generator)?;
        let m = prime_dlog(self.p, g0, n)?;
        let q1 = (self.q - 1) as u128;
        let step = q1 / (self.p as u128 - 1);
        Ok(((d as u128 % q1) * (m as u128) % q1 * step % q1) as u64)
    }

    /// Multiplicative order of the character `chi_d` on this field.
    pub fn character_order(&self, d: u64) -> u64 {
        let m = self.q - 1;
        let d = d % m;
        if d == 0 {
            1
        } else {
            m / gcd_u64(d, m)
        }
    }

    fn find_generator(&self) -> Result<FieldElt> {
        let q1 = self.q - 1;
        let factors = trial_factors(q1);
        'next: for idx in 1..self.q {
            let e = self.from_index(idx);
            for &r in &factors {
                if self.pow(e, (q1 / r) as u128) == self.one() {
                    continue 'next;
                }
            }
            return Ok(e);
        }
        Err(Error::NoIrreducible {
            p: self.p,
            nu: self.nu,
        })
    }
}

fn clone_err(e: &Error) -> Error {
    match e {
        Error::FieldTooLarge(a, b) => Error::FieldTooLarge(*a, *b),
        other => Error::Unsupported(other.to_string()),
    }
}

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

/// Least primitive root mod `p`.
pub fn least_primitive_root(p: u64) -> Result<u64> {
    let factors = trial_factors(p - 1);
    'next: for g in 2..p {
        for &r in &factors {
            if mod_pow(g, (p - 1) / r, p) == 1 {
                continue 'next;
            }
        }
        return Ok(g);
    }
    Err(Error::NotOddPrime(p))
}

/// Brute-force discrete log in `F_p^x`; fields here are small.
fn prime_dlog(p: u64, g: u64, target: u64) -> Result<u64> {
    if p as u128 > MAX_LOG_TABLE_ORDER {
        return Err(Error::FieldTooLarge(p as u128, MAX_LOG_TABLE_ORDER));
    }
    let mut cur = 1u64;
    for k in 0..p - 1 {
        if cur == target {
            return Ok(k);
        }
        cur = mul_mod(cur, g, p);
    }
    Err(Error::Unsupported(format!(
        "{target} is not in the group generated by {g} mod {p}"
    )))
}

// --- dense univariate arithmetic over F_p used for modulus search ---

fn poly_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    poly_trim(&mut r);
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for i in 0..=dm {
                let s = mul_mod(lead, m[i], p);
                let idx = shift + i;
                r[idx] = (r[idx] + p - s) % p;
            }
        }
        r.pop();
        poly_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn poly_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + mul_mod(ai, bj, p)) % p;
        }
    }
    poly_rem(&prod, m, p)
}

fn poly_powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut r = vec![1u64];
    let mut b = poly_rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            r = poly_mulmod(&r, &b, m, p);
        }
        b = poly_mulmod(&b, &b, m, p);
        e >>= 1;
    }
    r
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !b.is_empty() {
        // reduce a mod b: make b monic first
        let lb = *b.last().unwrap();
        let lb_inv = mod_pow(lb, p - 2, p);
        let monic: Vec<u64> = b.iter().map(|&c| mul_mod(c, lb_inv, p)).collect();
        let r = poly_rem(&a, &monic, p);
        a = b;
        b = r;
    }
    a
}

/// Irreducibility of a monic polynomial over `F_p`, checked via
/// `gcd(X^{p^k} - X, m) = 1` for `k < deg` and `X^{p^deg} = X mod m`.
pub fn is_irreducible(p: u64, m: &[u64]) -> bool {
    let nu = m.len() - 1;
    if nu == 0 {
        return false;
    }
    if nu == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    let mut t = x.clone();
    for k in 1..=nu {
        t = poly_powmod(&t, p, m, p);
        let mut diff = vec![0u64; t.len().max(2)];
        for (i, &c) in t.iter().enumerate() {
            diff[i] = c;
        }
        diff[1] = (diff[1] + p - 1) % p;
        poly_trim(&mut diff);
        if k < nu {
            let g = poly_gcd(m, &diff, p);
            if g.len() != 1 {
                return false;
            }
        } else if !diff.is_empty() {
            return false;
        }
    }
    true
}

/// Lexicographically least monic irreducible of degree `nu` over `F_p`
/// (coefficient tuples compared high degree first).
pub fn least_irreducible(p: u64, nu: usize) -> Result<Vec<u64>> {
    if nu == 0 || nu > MAX_DEG {
        return Err(Error::BadModulus(nu));
    }
    let mut count: u128 = 1;
    for _ in 0..nu {
        count *= p as u128;
    }
    for k in 0..count {
        let mut m = vec![0u64; nu + 1];
        m[nu] = 1;
        let mut rest = k;
        for slot in m.iter_mut().take(nu) {
            *slot = (rest % p as u128) as u64;
            rest /= p as u128;
        }
        if is_irreducible(p, &m) {
            return Ok(m);
        }
    }
    Err(Error::NoIrreducible { p, nu })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(p: u64, nu: usize) -> ExtField {
        ExtField::new(p, nu).unwrap()
    }

    #[test]
    fn rejects_non_odd_primes() {
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(2).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(7).is_ok());
    }

    #[test]
    fn trace_basics() {
        let f9 = f(3, 2);
        assert_eq!(f9.trace_to_prime(f9.zero()).unwrap(), 0);
        // Tr(1) = nu mod p
        assert_eq!(f9.trace_to_prime(f9.one()).unwrap(), 2);
    }

    #[test]
    fn trace_of_generator_explicit_modulus() {
        // F_25 with modulus X^2 - 2; Tr(g) for g = X is the constant term
        // of g + g^5, computed here by repeated squaring.
        let field = ExtField::with_modulus(5, &[3, 0, 1]).unwrap(); // X^2 + 3 = X^2 - 2
        let g = field.x_elt();
        let g5 = field.pow(g, 5);
        let s = field.add(g, g5);
        assert!(s.is_scalar());
        assert_eq!(field.trace_to_prime(g).unwrap(), s.constant_coeff());
        assert_eq!(s.constant_coeff(), 0);
    }

    #[test]
    fn trace_mismatch_rejected() {
        let f9 = f(3, 2);
        let f3 = f(3, 1);
        assert!(f9.trace_to_prime(f3.one()).is_err());
    }

    #[test]
    fn psi_values() {
        let f5 = f(5, 1);
        assert!((f5.psi(f5.zero()).unwrap() - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        let expected = Complex64::from_polar(1.0, TAU / 5.0);
        assert!((f5.psi(f5.one()).unwrap() - expected).norm() < 1e-15);
        for p in [3u64, 7, 31, 101] {
            let fp = f(p, 1);
            let sum: Complex64 = fp.elements().map(|e| fp.psi(e).unwrap()).sum();
            assert!(sum.norm() < 1e-9, "sum psi over F_{p} = {sum}");
        }
    }

    #[test]
    fn psi_sum_vanishes_over_extensions() {
        for (p, nu) in [(3u64, 2usize), (5, 2), (7, 2), (5, 3)] {
            let field = f(p, nu);
            let sum: Complex64 = field.elements().map(|e| field.psi(e).unwrap()).sum();
            assert!(sum.norm() < 1e-9);
        }
    }

    #[test]
    fn chi_values() {
        let f7 = f(7, 1);
        let legendre = 3; // (p-1)/2
        for d in 0..6 {
            assert!((f7.chi(f7.one(), d).unwrap() - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        }
        assert_eq!(f7.chi(f7.zero(), legendre).unwrap().norm(), 0.0);
        // 3 is a quadratic non-residue mod 7 (squares are 1, 2, 4).
        let v = f7.chi(f7.scalar(3), legendre).unwrap();
        assert!((v - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
        // cross-check the Legendre character against explicit squaring
        let squares: std::collections::HashSet<u64> = (1..7).map(|x| x * x % 7).collect();
        for x in 1..7u64 {
            let expect = if squares.contains(&x) { 1.0 } else { -1.0 };
            let got = f7.chi(f7.scalar(x), legendre).unwrap();
            assert!((got - Complex64::new(expect, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn chi_orthogonality_and_modulus() {
        for (p, nu) in [(7u64, 1usize), (5, 2), (13, 1)] {
            let field = f(p, nu);
            for d in 1..(field.order() - 1).min(8) {
                let mut sum = Complex64::new(0.0, 0.0);
                for e in field.elements() {
                    let v = field.chi(e, d).unwrap();
                    if !e.is_zero() {
                        assert!((v.norm() - 1.0).abs() < 1e-12);
                    }
                    sum += v;
                }
                assert!(sum.norm() < 1e-9, "chi_{d} sum over order {}", field.order());
            }
        }
    }

    #[test]
    fn dlog_table_roundtrip() {
        let f5 = f(5, 1);
        assert_eq!(f5.generator().constant_coeff(), 2);
        assert_eq!(f5.dlog(f5.generator()).unwrap(), Some(1));
        assert_eq!(f5.dlog(f5.one()).unwrap(), Some(0));
        assert_eq!(f5.dlog(f5.scalar(4)).unwrap(), Some(2)); // 2^2 = 4
        let f49 = f(7, 2);
        let (log, exp) = f49.discrete_log_table().unwrap();
        for e in f49.elements().filter(|e| !e.is_zero()) {
            let k = log[f49.index(e) as usize];
            assert_eq!(exp[k as usize] as u64, f49.index(e));
            assert_eq!(f49.pow(f49.generator(), k as u128), e);
        }
    }

    #[test]
    fn log_table_guard() {
        // order fits the field bound but exceeds the table guard
        let field = ExtField::new(262147, 1).unwrap();
        assert!(field.discrete_log_table().is_err() == (field.order() as u128 > MAX_LOG_TABLE_ORDER));
    }

    #[test]
    fn inverse_and_norm() {
        let field = f(7, 2);
        for e in field.elements().filter(|e| !e.is_zero()) {
            let i = field.inv(e).unwrap();
            assert_eq!(field.mul(e, i), field.one());
            // norm is multiplicative and lands in F_p
            let n = field.norm_to_prime(e).unwrap();
            assert!(n < 7 && n != 0);
        }
        assert!(field.inv(field.zero()).is_none());
    }

    #[test]
    fn norm_compatible_character_lift() {
        // chi_D on F_{p^2} with D = lift(d) must equal chi_d(N(.)).
        let p = 7u64;
        let base = f(p, 1);
        let ext = f(p, 2);
        for d in 0..p - 1 {
            let big_d = ext.lift_character_index(d).unwrap();
            for e in ext.elements().filter(|e| !e.is_zero()) {
                let lhs = ext.chi(e, big_d).unwrap();
                let n = ext.norm_to_prime(e).unwrap();
                let rhs = base.chi(base.scalar(n), d).unwrap();
                assert!((lhs - rhs).norm() < 1e-10, "d={d} e={e:?}");
            }
        }
    }

    #[test]
    fn trace_transitivity() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let p = 5u64;
        let f4 = f(p, 4);
        for _ in 0..100 {
            let e = f4.from_index(rng.gen_range(0..f4.order()));
            // relative trace to the degree-2 subfield, inside F_{p^4}
            let rel = f4.add(e, f4.pow(e, (p * p) as u128));
            debug_assert_eq!(rel, {
                // rel is fixed by Frobenius^2
                f4.pow(rel, (p * p) as u128)
            });
            let tower = f4.add(rel, f4.frobenius(rel));
            assert!(tower.is_scalar());
            assert_eq!(f4.trace_to_prime(e).unwrap(), tower.constant_coeff());
        }
    }

    #[test]
    fn basis_independence_of_character_sums() {
        // same (p, nu), two irreducible moduli: complete sums agree
        let a = ExtField::with_modulus(5, &[2, 0, 1]).unwrap(); // X^2 + 2
        let b = ExtField::with_modulus(5, &[3, 0, 1]).unwrap(); // X^2 - 2
        let sum = |field: &ExtField| -> Complex64 {
            field
                .elements()
                .map(|x| {
                    let v = field.add(field.mul(field.mul(x, x), x), x); // x^3 + x
                    field.psi(v).unwrap()
                })
                .sum()
        };
        assert!((sum(&a) - sum(&b)).norm() < 1e-9);
    }

    #[test]
    fn least_irreducible_is_deterministic() {
        assert_eq!(least_irreducible(5, 2).unwrap(), vec![2, 0, 1]);
        assert_eq!(least_irreducible(3, 1).unwrap(), vec![0, 1]);
        let m = least_irreducible(7, 3).unwrap();
        assert!(is_irreducible(7, &m));
        // mod 5, -1 = 4 = 2^2 is a residue, so X^2 + 1 factors
        assert!(ExtField::with_modulus(5, &[1, 0, 1]).is_err());
        // mod 7, -1 is a non-residue, so X^2 + 1 is a valid modulus
        assert!(ExtField::with_modulus(7, &[1, 0, 1]).is_ok());
    }

    proptest! {
        #[test]
        fn psi_is_additive(ai in 0u64..124, bi in 0u64..124) {
            let field = f(5, 3);
            let a = field.from_index(ai);
            let b = field.from_index(bi);
            let lhs = field.psi(field.add(a, b)).unwrap();
            let rhs = field.psi(a).unwrap() * field.psi(b).unwrap();
            prop_assert!((lhs - rhs).norm() < 1e-12);
        }

        #[test]
        fn mul_is_commutative_and_assoc(ai in 0u64..344, bi in 0u64..344, ci in 0u64..344) {
            let field = f(7, 3);
            let a = field.from_index(ai % field.order());
            let b = field.from_index(bi % field.order());
            let c = field.from_index(ci % field.order());
            prop_assert_eq!(field.mul(a, b), field.mul(b, a));
            prop_assert_eq!(field.mul(field.mul(a, b), c), field.mul(a, field.mul(b, c)));
        }
    }
}
