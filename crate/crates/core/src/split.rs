//! Splitting algebras by iterated root adjunction.
//!
//! `Split^r(p)` is built one root at a time: `Split^j` is `Split^{j-1}[x]`
//! modulo the monic cofactor `p^(j-1)`, whose coefficients live in
//! `Split^{j-1}`. The monomials `ξ_1^{i_1} ⋯ ξ_r^{i_r}` with `i_ν <= n - ν`
//! form a basis, indexed in lexicographic order of the exponent tuple, which
//! is a mixed-radix numbering with radices `n, n-1, ..., n-r+1`.
//!
//! Because of that numbering, an element of `Split^j` sits inside `Split^L`
//! (for `j <= L`) by scaling its index with `dims[L] / dims[j]`, and
//! multiplying by `ξ_j` only touches the `j`-th digit: either the digit is
//! incremented, or (at the top digit) a precomputed reduction of
//! `ξ_j^{n-j+1}` against the lower prefix is spliced in.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::MonicPoly;
use crate::ring::Ring;

/// Default degree cap for splitting-algebra arithmetic (rank `n!` storage).
pub const DEFAULT_ARITH_CAP: usize = 8;

static NEXT_CONTEXT_ID: AtomicU64 = AtomicU64::new(1);

type Sparse<E> = Vec<(usize, E)>;

/// Exponent tuple `(i_1, ..., i_r)` of a basis monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<usize>,
}

impl Monomial {
    pub fn new(exponents: Vec<usize>) -> Self {
        Monomial { exponents }
    }

    pub fn exponents(&self) -> &[usize] {
        &self.exponents
    }

    pub fn degree(&self) -> usize {
        self.exponents.iter().sum()
    }

    /// Whether `i_ν <= n - ν` for every position.
    pub fn is_admissible(&self, n: usize) -> bool {
        self.exponents.len() <= n && self.exponents.iter().enumerate().all(|(k, &e)| e < n - k)
    }

    /// `ξ_1^{n-1} ξ_2^{n-2} ⋯ ξ_{n-1}`, the leading Vandermonde monomial, at level `n`.
    pub fn staircase(n: usize) -> Self {
        Monomial {
            exponents: (0..n).map(|k| n - 1 - k).collect(),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| {
                if e == 1 {
                    format!("x{}", k + 1)
                } else {
                    format!("x{}^{}", k + 1, e)
                }
            })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Element of a splitting algebra `Split^j` in normal form over the monomial basis.
#[derive(Clone, Debug)]
pub struct SplitElement<R: Ring> {
    ctx_id: u64,
    level: usize,
    coeffs: Vec<R::Elem>,
}

// Manual impls: the bounds belong on `R::Elem`, not on the ring marker `R`.
impl<R: Ring> PartialEq for SplitElement<R> {
    fn eq(&self, other: &Self) -> bool {
        self.ctx_id == other.ctx_id && self.level == other.level && self.coeffs == other.coeffs
    }
}

impl<R: Ring> Eq for SplitElement<R> {}

impl<R: Ring> SplitElement<R> {
    pub fn level(&self) -> usize {
        self.level
    }

    /// Coefficients indexed by the lexicographically ordered basis.
    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R::Elem> {
        self.coeffs
    }
}

/// Precomputed reduction data for `Split^r(p)`, with every intermediate level `0..=r`.
#[derive(Clone, Debug)]
pub struct SplitContext<R: Ring> {
    id: u64,
    ring: R,
    poly: MonicPoly<R>,
    n: usize,
    level: usize,
    /// `dims[j] = n (n-1) ⋯ (n-j+1)`.
    dims: Vec<usize>,
    /// `excess[j-1][q]`: normal form in `Split^j` of `ξ_j · b_q ξ_j^{n-j}`, `b_q` the
    /// `q`-th basis monomial of `Split^{j-1}`.
    excess: Vec<Vec<Sparse<R::Elem>>>,
    /// `tower[j][l]`: coefficient of `t^{n-j-l}` in `p^(j)`, as a dense element of `Split^j`.
    tower: Vec<Vec<Vec<R::Elem>>>,
}

impl<R: Ring> SplitContext<R> {
    /// Builds `Split^level(p)` with the default degree cap.
    pub fn build(poly: &MonicPoly<R>, level: usize) -> Result<Self> {
        Self::build_with_cap(poly, level, DEFAULT_ARITH_CAP)
    }

    pub fn build_with_cap(poly: &MonicPoly<R>, level: usize, cap: usize) -> Result<Self> {
        let n = poly.degree();
        if n > cap {
            return Err(Error::CapExceeded {
                what: "splitting algebra arithmetic",
                n,
                cap,
                flag: "--cap-n",
            });
        }
        if level > n {
            return Err(Error::LevelOutOfRange { level, n });
        }
        let ring = poly.ring().clone();
        let mut dims = vec![1usize];
        for j in 1..=level {
            dims.push(dims[j - 1] * (n - j + 1));
        }
        let base: Vec<Vec<R::Elem>> = poly.coeffs().iter().map(|a| vec![a.clone()]).collect();
        let mut ctx = SplitContext {
            id: NEXT_CONTEXT_ID.fetch_add(1, Ordering::Relaxed),
            ring,
            poly: poly.clone(),
            n,
            level,
            dims,
            excess: Vec::with_capacity(level),
            tower: vec![base],
        };
        for j in 1..=level {
            ctx.adjoin_root(j)?;
        }
        Ok(ctx)
    }

    /// Adjoins `ξ_j` as a root of `p^(j-1)` and divides it out.
    fn adjoin_root(&mut self, j: usize) -> Result<()> {
        let r = self.ring.clone();
        let radix = self.n - j + 1;
        let prev = self.tower[j - 1].clone();
        debug_assert_eq!(prev.len(), radix + 1);

        // ξ_j^{radix} = -Σ_{l>=1} c_l ξ_j^{radix-l}, multiplied by each prefix monomial.
        let mut table: Vec<Sparse<R::Elem>> = vec![Vec::new(); self.dims[j - 1]];
        for (l, c) in prev.iter().enumerate().skip(1) {
            let slot = radix - l;
            self.each_monomial_multiple(j - 1, c.clone(), &mut |q, prod| {
                for (idx, x) in prod.iter().enumerate() {
                    if !r.is_zero(x) {
                        table[q].push((idx * radix + slot, r.neg(x)));
                    }
                }
            });
        }
        for entries in &mut table {
            entries.sort_by_key(|(i, _)| *i);
        }
        self.excess.push(table);

        // Synthetic division of p^(j-1) by (t - ξ_j) in Split^j[t].
        let c: Vec<Vec<R::Elem>> = prev.iter().map(|v| self.embed_raw(v, j - 1, j)).collect();
        let mut quotient = Vec::with_capacity(radix);
        let mut acc = c[0].clone();
        for cl in &c[1..] {
            quotient.push(acc.clone());
            let shifted = self.apply_xi(j, j, &acc);
            acc = shifted.iter().zip(cl).map(|(a, b)| r.add(a, b)).collect();
        }
        if acc.iter().any(|x| !r.is_zero(x)) {
            return Err(Error::Internal(format!(
                "remainder p^({})(ξ_{j}) does not vanish",
                j - 1
            )));
        }
        self.tower.push(quotient);
        Ok(())
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn poly(&self) -> &MonicPoly<R> {
        &self.poly
    }

    /// Degree `n` of `p`.
    pub fn degree(&self) -> usize {
        self.n
    }

    /// The level `r` of this context.
    pub fn level(&self) -> usize {
        self.level
    }

    pub fn is_complete(&self) -> bool {
        self.level == self.n
    }

    /// Rank `n (n-1) ⋯ (n-j+1)` of `Split^j`.
    pub fn rank(&self, j: usize) -> usize {
        self.dims[j]
    }

    /// Rank of the top level.
    pub fn dim(&self) -> usize {
        self.dims[self.level]
    }

    fn check_level(&self, j: usize) -> Result<()> {
        if j > self.level {
            return Err(Error::LevelOutOfRange {
                level: j,
                n: self.level,
            });
        }
        Ok(())
    }

    pub(crate) fn require_complete(&self) -> Result<()> {
        if !self.is_complete() {
            return Err(Error::NotComplete {
                level: self.level,
                n: self.n,
            });
        }
        Ok(())
    }

    fn check(&self, x: &SplitElement<R>) -> Result<()> {
        if x.ctx_id != self.id {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    // ---- basis -------------------------------------------------------------

    /// Basis monomials of `Split^j` in lexicographic order.
    pub fn basis(&self, j: usize) -> Vec<Monomial> {
        (0..self.dims[j]).map(|i| self.monomial_at(j, i)).collect()
    }

    pub fn monomial_at(&self, j: usize, mut idx: usize) -> Monomial {
        let mut exps = vec![0; j];
        for k in (0..j).rev() {
            let radix = self.n - k;
            exps[k] = idx % radix;
            idx /= radix;
        }
        Monomial::new(exps)
    }

    /// Index of an admissible monomial at level `j`; shorter tuples are padded with zeros.
    pub fn index_of(&self, j: usize, m: &Monomial) -> Result<usize> {
        self.check_level(j)?;
        if m.exponents.len() > j || !m.is_admissible(self.n) {
            return Err(Error::IndexOutOfRange(format!(
                "monomial {m} is not a basis monomial of level {j} for degree {}",
                self.n
            )));
        }
        let mut idx = 0;
        for k in 0..j {
            idx = idx * (self.n - k) + m.exponents.get(k).copied().unwrap_or(0);
        }
        Ok(idx)
    }

    // ---- constructors ------------------------------------------------------

    fn wrap(&self, level: usize, coeffs: Vec<R::Elem>) -> SplitElement<R> {
        debug_assert_eq!(coeffs.len(), self.dims[level]);
        SplitElement {
            ctx_id: self.id,
            level,
            coeffs,
        }
    }

    pub fn element(&self, level: usize, coeffs: Vec<R::Elem>) -> Result<SplitElement<R>> {
        self.check_level(level)?;
        if coeffs.len() != self.dims[level] {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for a basis of size {}",
                coeffs.len(),
                self.dims[level]
            )));
        }
        Ok(self.wrap(level, coeffs))
    }

    pub fn zero(&self) -> SplitElement<R> {
        self.scalar(self.ring.zero())
    }

    pub fn one(&self) -> SplitElement<R> {
        self.scalar(self.ring.one())
    }

    /// `c · 1` at the top level.
    pub fn scalar(&self, c: R::Elem) -> SplitElement<R> {
        let mut v = vec![self.ring.zero(); self.dim()];
        v[0] = c;
        self.wrap(self.level, v)
    }

    /// `c · m` at the top level.
    pub fn monomial(&self, m: &Monomial, c: R::Elem) -> Result<SplitElement<R>> {
        let idx = self.index_of(self.level, m)?;
        let mut v = vec![self.ring.zero(); self.dim()];
        v[idx] = c;
        Ok(self.wrap(self.level, v))
    }

    /// The root `ξ_j` (1-based) as an element of the top level.
    pub fn root(&self, j: usize) -> Result<SplitElement<R>> {
        if j == 0 || j > self.level {
            return Err(Error::IndexOutOfRange(format!(
                "root ξ_{j} at level {}",
                self.level
            )));
        }
        let mut one = vec![self.ring.zero(); self.dim()];
        one[0] = self.ring.one();
        Ok(self.wrap(self.level, self.apply_xi(j, self.level, &one)))
    }

    /// Coefficients of `p^(j)` (leading `1` first), as elements of `Split^j`.
    pub fn cofactor(&self, j: usize) -> Result<Vec<SplitElement<R>>> {
        self.check_level(j)?;
        Ok(self.tower[j]
            .iter()
            .map(|c| self.wrap(j, c.clone()))
            .collect())
    }

    // ---- arithmetic --------------------------------------------------------

    fn embed_raw(&self, v: &[R::Elem], from: usize, to: usize) -> Vec<R::Elem> {
        if from == to {
            return v.to_vec();
        }
        let stride = self.dims[to] / self.dims[from];
        let mut out = vec![self.ring.zero(); self.dims[to]];
        for (i, x) in v.iter().enumerate() {
            out[i * stride] = x.clone();
        }
        out
    }

    /// Image of `x` under the inclusion `Split^{x.level} → Split^to`.
    pub fn embed(&self, x: &SplitElement<R>, to: usize) -> Result<SplitElement<R>> {
        self.check(x)?;
        self.check_level(to)?;
        if to < x.level {
            return Err(Error::LevelOutOfRange {
                level: x.level,
                n: to,
            });
        }
        Ok(self.wrap(to, self.embed_raw(&x.coeffs, x.level, to)))
    }

    fn align(
        &self,
        x: &SplitElement<R>,
        y: &SplitElement<R>,
    ) -> Result<(usize, Vec<R::Elem>, Vec<R::Elem>)> {
        self.check(x)?;
        self.check(y)?;
        let level = x.level.max(y.level);
        Ok((
            level,
            self.embed_raw(&x.coeffs, x.level, level),
            self.embed_raw(&y.coeffs, y.level, level),
        ))
    }

    pub fn add(&self, x: &SplitElement<R>, y: &SplitElement<R>) -> Result<SplitElement<R>> {
        let (level, a, b) = self.align(x, y)?;
        let v = a.iter().zip(&b).map(|(p, q)| self.ring.add(p, q)).collect();
        Ok(self.wrap(level, v))
    }

    pub fn sub(&self, x: &SplitElement<R>, y: &SplitElement<R>) -> Result<SplitElement<R>> {
        let (level, a, b) = self.align(x, y)?;
        let v = a.iter().zip(&b).map(|(p, q)| self.ring.sub(p, q)).collect();
        Ok(self.wrap(level, v))
    }

    pub fn neg(&self, x: &SplitElement<R>) -> Result<SplitElement<R>> {
        self.check(x)?;
        let v = x.coeffs.iter().map(|a| self.ring.neg(a)).collect();
        Ok(self.wrap(x.level, v))
    }

    pub fn scale(&self, c: &R::Elem, x: &SplitElement<R>) -> Result<SplitElement<R>> {
        self.check(x)?;
        Ok(self.wrap(x.level, self.scale_raw(c, &x.coeffs)))
    }

    fn scale_raw(&self, c: &R::Elem, v: &[R::Elem]) -> Vec<R::Elem> {
        v.iter().map(|a| self.ring.mul(c, a)).collect()
    }

    /// Product in normal form.
    pub fn mul(&self, x: &SplitElement<R>, y: &SplitElement<R>) -> Result<SplitElement<R>> {
        let (level, a, b) = self.align(x, y)?;
        Ok(self.wrap(level, self.mul_raw(level, &a, &b)))
    }

    pub fn pow(&self, x: &SplitElement<R>, e: usize) -> Result<SplitElement<R>> {
        self.check(x)?;
        let mut acc = self.embed(&self.one_at(0), x.level)?;
        for _ in 0..e {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    fn one_at(&self, level: usize) -> SplitElement<R> {
        let mut v = vec![self.ring.zero(); self.dims[level]];
        v[0] = self.ring.one();
        self.wrap(level, v)
    }

    /// `Some(c)` when `x = c · 1`.
    pub fn as_scalar(&self, x: &SplitElement<R>) -> Option<R::Elem> {
        x.coeffs[1..]
            .iter()
            .all(|c| self.ring.is_zero(c))
            .then(|| x.coeffs[0].clone())
    }

    /// Nonzero `(monomial, coefficient)` terms in basis order.
    pub fn terms(&self, x: &SplitElement<R>) -> Vec<(Monomial, R::Elem)> {
        x.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.ring.is_zero(c))
            .map(|(i, c)| (self.monomial_at(x.level, i), c.clone()))
            .collect()
    }

    /// Multiplication by `ξ_j` on a dense vector of level `level >= j`.
    pub(crate) fn apply_xi(&self, j: usize, level: usize, x: &[R::Elem]) -> Vec<R::Elem> {
        let r = &self.ring;
        let mut out = vec![r.zero(); x.len()];
        let stride = self.dims[level] / self.dims[j];
        let radix = self.n - j + 1;
        let table = &self.excess[j - 1];
        for (idx, c) in x.iter().enumerate() {
            if r.is_zero(c) {
                continue;
            }
            let prefix = idx / stride;
            if prefix % radix + 1 < radix {
                let t = idx + stride;
                out[t] = r.add(&out[t], c);
            } else {
                let suffix = idx % stride;
                for (t, tc) in &table[prefix / radix] {
                    r.add_mul_assign(&mut out[t * stride + suffix], c, tc);
                }
            }
        }
        out
    }

    /// `x · y` at `level`, by Horner's scheme over the digits of `y`.
    pub(crate) fn mul_raw(&self, level: usize, x: &[R::Elem], y: &[R::Elem]) -> Vec<R::Elem> {
        self.horner(level, x, y, 1, 0, self.dims[level])
            .unwrap_or_else(|| vec![self.ring.zero(); self.dims[level]])
    }

    fn horner(
        &self,
        level: usize,
        x: &[R::Elem],
        y: &[R::Elem],
        var: usize,
        offset: usize,
        block: usize,
    ) -> Option<Vec<R::Elem>> {
        if var > level {
            let c = &y[offset];
            return (!self.ring.is_zero(c)).then(|| self.scale_raw(c, x));
        }
        if y[offset..offset + block].iter().all(|c| self.ring.is_zero(c)) {
            return None;
        }
        let radix = self.n - var + 1;
        let sub = block / radix;
        let mut acc: Option<Vec<R::Elem>> = None;
        for e in (0..radix).rev() {
            let part = self.horner(level, x, y, var + 1, offset + e * sub, sub);
            acc = match (acc, part) {
                (None, part) => part,
                (Some(a), part) => {
                    let mut shifted = self.apply_xi(var, level, &a);
                    if let Some(p) = part {
                        for (s, q) in shifted.iter_mut().zip(&p) {
                            *s = self.ring.add(s, q);
                        }
                    }
                    Some(shifted)
                }
            };
        }
        acc
    }

    /// Calls `f(q, b_q · v)` for every basis monomial `b_q` of `level`, in index order.
    pub(crate) fn each_monomial_multiple(
        &self,
        level: usize,
        v: Vec<R::Elem>,
        f: &mut impl FnMut(usize, &[R::Elem]),
    ) {
        self.monomial_dfs(level, 1, 0, v, &|j, lvl, w| self.apply_xi(j, lvl, w), f);
    }

    fn monomial_dfs(
        &self,
        level: usize,
        var: usize,
        prefix: usize,
        cur: Vec<R::Elem>,
        step: &dyn Fn(usize, usize, &[R::Elem]) -> Vec<R::Elem>,
        f: &mut impl FnMut(usize, &[R::Elem]),
    ) {
        if var > level {
            f(prefix, &cur);
            return;
        }
        let radix = self.n - var + 1;
        let mut w = cur;
        for e in 0..radix {
            if e > 0 {
                w = step(var, level, &w);
            }
            if e + 1 == radix {
                self.monomial_dfs(level, var + 1, prefix * radix + e, w, step, f);
                return;
            }
            self.monomial_dfs(level, var + 1, prefix * radix + e, w.clone(), step, f);
        }
    }

    // ---- symmetric group action -------------------------------------------

    fn check_perm(&self, sigma: &Permutation) -> Result<()> {
        if sigma.degree() != self.n {
            return Err(Error::NotAPermutation {
                n: self.n,
                perm: sigma.images_one_based(),
            });
        }
        Ok(())
    }

    /// Image of `x` under the automorphism `ξ_j ↦ ξ_{σ(j)}` of `Split^n`.
    ///
    /// Evaluated term by term: each basis monomial is sent to the normal-form
    /// product of the powers of the images `ξ_{σ(j)}`.
    pub fn permute(&self, sigma: &Permutation, x: &SplitElement<R>) -> Result<SplitElement<R>> {
        self.require_complete()?;
        self.check_perm(sigma)?;
        self.check(x)?;
        let x = self.embed(x, self.n)?;
        let images: Vec<Vec<R::Elem>> = (1..=self.n)
            .map(|j| self.root(sigma.apply(j - 1) + 1).map(|e| e.coeffs))
            .collect::<Result<_>>()?;
        let r = &self.ring;
        let mut out = vec![r.zero(); self.dim()];
        let mut one = vec![r.zero(); self.dim()];
        one[0] = r.one();
        let step = |j: usize, lvl: usize, w: &[R::Elem]| self.mul_raw(lvl, w, &images[j - 1]);
        self.monomial_dfs(self.n, 1, 0, one, &step, &mut |q, img| {
            let c = &x.coeffs[q];
            if !r.is_zero(c) {
                for (o, v) in out.iter_mut().zip(img) {
                    r.add_mul_assign(o, c, v);
                }
            }
        });
        Ok(self.wrap(self.n, out))
    }

    /// `σ(m)` for a basis monomial `m`, by repeated multiplication with the image roots.
    pub(crate) fn monomial_image(&self, sigma: &Permutation, m: &Monomial) -> Result<Vec<R::Elem>> {
        self.require_complete()?;
        self.check_perm(sigma)?;
        let mut v = vec![self.ring.zero(); self.dim()];
        v[0] = self.ring.one();
        for (k, &e) in m.exponents().iter().enumerate() {
            for _ in 0..e {
                v = self.apply_xi(sigma.apply(k) + 1, self.n, &v);
            }
        }
        Ok(v)
    }

    /// Columns of the matrix of `σ` on the monomial basis of `Split^n`.
    pub(crate) fn permutation_columns(&self, sigma: &Permutation) -> Result<Vec<Vec<R::Elem>>> {
        self.require_complete()?;
        self.check_perm(sigma)?;
        let mut one = vec![self.ring.zero(); self.dim()];
        one[0] = self.ring.one();
        let mut cols = vec![Vec::new(); self.dim()];
        let step = |j: usize, lvl: usize, w: &[R::Elem]| self.apply_xi(sigma.apply(j - 1) + 1, lvl, w);
        self.monomial_dfs(self.n, 1, 0, one, &step, &mut |q, img| {
            cols[q] = img.to_vec();
        });
        Ok(cols)
    }

    // ---- structural checks -------------------------------------------------

    /// Expands `(t-ξ_1)⋯(t-ξ_r) · p^(r)(t)` in `Split^r[t]` and compares it with `p`.
    pub fn verify_factorization(&self) -> Result<bool> {
        let r = self.level;
        let mut prod: Vec<SplitElement<R>> = vec![self.one()];
        for j in 1..=r {
            let lin = vec![self.one(), self.neg(&self.root(j)?)?];
            prod = self.poly_mul(&prod, &lin)?;
        }
        let cof: Vec<SplitElement<R>> = self
            .cofactor(r)?
            .iter()
            .map(|c| self.embed(c, r))
            .collect::<Result<_>>()?;
        let full = self.poly_mul(&prod, &cof)?;
        if full.len() != self.poly.coeffs().len() {
            return Ok(false);
        }
        Ok(full
            .iter()
            .zip(self.poly.coeffs())
            .all(|(c, a)| *c == self.scalar(a.clone())))
    }

    /// Product of two polynomials over `Split^r`, coefficient lists leading-first.
    pub fn poly_mul(
        &self,
        a: &[SplitElement<R>],
        b: &[SplitElement<R>],
    ) -> Result<Vec<SplitElement<R>>> {
        if a.is_empty() || b.is_empty() {
            return Ok(Vec::new());
        }
        let mut out = vec![self.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                let t = self.mul(x, y)?;
                out[i + j] = self.add(&out[i + j], &t)?;
            }
        }
        Ok(out)
    }

    /// Whether `ξ_1, ..., ξ_n` are pairwise distinct elements of `Split^n`.
    pub fn roots_pairwise_distinct(&self) -> Result<bool> {
        self.require_complete()?;
        let roots: Vec<SplitElement<R>> = (1..=self.n).map(|j| self.root(j)).collect::<Result<_>>()?;
        for i in 0..roots.len() {
            for j in i + 1..roots.len() {
                if roots[i] == roots[j] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}
