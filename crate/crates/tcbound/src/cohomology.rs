//! Finite-dimensional graded-commutative algebras given by an additive basis
//! and structure constants.
//!
//! Coefficients live in `Z_p` (prime `p`) or in `Z` (`modulus = 0`, with
//! optional per-basis additive annihilators). Products landing above
//! `top_degree` are truncated to zero, modelling the cohomology of a finite
//! complex of that dimension. Künneth squares carry the Koszul sign rule
//! `(a⊗b)(a'⊗b') = (-1)^{|b||a'|} (aa')⊗(bb')`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Hard cap on basis size, including Künneth products.
pub const MAX_ALGEBRA_DIM: usize = 2_500;

/// A graded-commutative algebra with a distinguished unit and a dense
/// structure-constant table (one sparse expansion per basis pair).
#[derive(Debug)]
pub struct GradedAlgebra {
    name: String,
    modulus: u64,
    top_degree: usize,
    labels: Vec<String>,
    degrees: Vec<usize>,
    unit: usize,
    generators: Vec<usize>,
    annihilators: Vec<u64>,
    index: BTreeMap<String, usize>,
    products: Vec<Vec<(u32, i64)>>,
}

impl GradedAlgebra {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn top_degree(&self) -> usize {
        self.top_degree
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.degrees[i]
    }

    pub fn unit_index(&self) -> usize {
        self.unit
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    /// Declared additive order of a basis class (0 = unconstrained); only
    /// meaningful for integer coefficients.
    pub fn annihilator(&self, i: usize) -> u64 {
        self.annihilators[i]
    }

    pub fn basis_index(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub(crate) fn product_terms(&self, i: usize, j: usize) -> &[(u32, i64)] {
        &self.products[i * self.dim() + j]
    }

    fn reduce(&self, c: i64) -> i64 {
        if self.modulus == 0 {
            c
        } else {
            c.rem_euclid(self.modulus as i64)
        }
    }

    /// Product of two dense coefficient vectors via the structure constants.
    fn mul_dense(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; self.dim()];
        for (i, &ca) in a.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            for (j, &cb) in b.iter().enumerate() {
                if cb == 0 {
                    continue;
                }
                for &(k, c) in self.product_terms(i, j) {
                    out[k as usize] = self.reduce(out[k as usize] + ca * cb * c);
                }
            }
        }
        out
    }

    fn dense_basis(&self, i: usize) -> Vec<i64> {
        let mut v = vec![0i64; self.dim()];
        v[i] = 1;
        v
    }

    /// Checks unit law, degree additivity (with truncation above
    /// `top_degree`), the graded-commutativity sign rule, and associativity
    /// on all basis triples. Violations are returned as data, not errors.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let dim = self.dim();
        if self.degrees[self.unit] != 0 {
            out.push(Violation::new(
                ViolationKind::UnitLaw,
                format!("unit `{}` has degree {}", self.labels[self.unit], self.degrees[self.unit]),
            ));
        }
        for i in 0..dim {
            let b = self.dense_basis(i);
            let u = self.dense_basis(self.unit);
            if self.mul_dense(&u, &b) != b || self.mul_dense(&b, &u) != b {
                out.push(Violation::new(
                    ViolationKind::UnitLaw,
                    format!("unit does not act as identity on `{}`", self.labels[i]),
                ));
            }
        }
        for i in 0..dim {
            for j in 0..dim {
                let d = self.degrees[i] + self.degrees[j];
                for &(k, c) in self.product_terms(i, j) {
                    if c == 0 {
                        continue;
                    }
                    if self.modulus > 0 && (c < 0 || c >= self.modulus as i64) {
                        out.push(Violation::new(
                            ViolationKind::Coefficient,
                            format!(
                                "`{}`·`{}` has unreduced coefficient {c}",
                                self.labels[i], self.labels[j]
                            ),
                        ));
                    }
                    if self.degrees[k as usize] != d || d > self.top_degree {
                        out.push(Violation::new(
                            ViolationKind::DegreeAdditivity,
                            format!(
                                "`{}`·`{}` contains `{}` of degree {} (expected {} <= {})",
                                self.labels[i],
                                self.labels[j],
                                self.labels[k as usize],
                                self.degrees[k as usize],
                                d,
                                self.top_degree
                            ),
                        ));
                    }
                }
            }
        }
        // Graded commutativity: b_j b_i = (-1)^{|i||j|} b_i b_j.
        for i in 0..dim {
            for j in i..dim {
                let forward = self.mul_dense(&self.dense_basis(i), &self.dense_basis(j));
                let mut backward = self.mul_dense(&self.dense_basis(j), &self.dense_basis(i));
                if self.degrees[i] * self.degrees[j] % 2 == 1 {
                    for c in &mut backward {
                        *c = self.reduce(-*c);
                    }
                }
                if forward != backward {
                    out.push(Violation::new(
                        ViolationKind::GradedCommutativity,
                        format!(
                            "`{}`·`{}` != (-1)^({}·{}) `{}`·`{}`",
                            self.labels[i],
                            self.labels[j],
                            self.degrees[i],
                            self.degrees[j],
                            self.labels[j],
                            self.labels[i]
                        ),
                    ));
                }
            }
        }
        for i in 0..dim {
            let bi = self.dense_basis(i);
            for j in 0..dim {
                let bj = self.dense_basis(j);
                let ij = self.mul_dense(&bi, &bj);
                for k in 0..dim {
                    let bk = self.dense_basis(k);
                    if self.mul_dense(&ij, &bk) != self.mul_dense(&bi, &self.mul_dense(&bj, &bk)) {
                        out.push(Violation::new(
                            ViolationKind::Associativity,
                            format!(
                                "(`{}`·`{}`)·`{}` != `{}`·(`{}`·`{}`)",
                                self.labels[i],
                                self.labels[j],
                                self.labels[k],
                                self.labels[i],
                                self.labels[j],
                                self.labels[k]
                            ),
                        ));
                    }
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    UnitLaw,
    DegreeAdditivity,
    GradedCommutativity,
    Associativity,
    Coefficient,
}

#[derive(Debug, Clone)]
pub struct Violation {
    pub kind: ViolationKind,
    pub detail: String,
}

impl Violation {
    fn new(kind: ViolationKind, detail: String) -> Self {
        Self { kind, detail }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {}", self.kind, self.detail)
    }
}

/// Incremental construction of a [`GradedAlgebra`].
///
/// Unit rows and columns of the product table are filled automatically;
/// when only one order of a basis pair is given, the other is completed by
/// the Koszul sign rule. Explicitly supplying both orders is allowed (and is
/// the door through which validation faults can be injected deliberately).
pub struct AlgebraBuilder {
    name: String,
    modulus: u64,
    top_degree: usize,
    basis: Vec<(String, usize)>,
    unit: Option<String>,
    generators: Vec<String>,
    annihilators: Vec<(String, u64)>,
    products: Vec<(String, String, Vec<(i64, String)>)>,
}

impl AlgebraBuilder {
    pub fn new(name: &str, modulus: u64, top_degree: usize) -> Self {
        Self {
            name: name.to_string(),
            modulus,
            top_degree,
            basis: Vec::new(),
            unit: None,
            generators: Vec::new(),
            annihilators: Vec::new(),
            products: Vec::new(),
        }
    }

    pub fn basis(mut self, label: &str, degree: usize) -> Self {
        self.basis.push((label.to_string(), degree));
        self
    }

    pub fn unit(mut self, label: &str) -> Self {
        self.unit = Some(label.to_string());
        self
    }

    pub fn generator(mut self, label: &str) -> Self {
        self.generators.push(label.to_string());
        self
    }

    pub fn annihilator(mut self, label: &str, order: u64) -> Self {
        self.annihilators.push((label.to_string(), order));
        self
    }

    pub fn product(mut self, left: &str, right: &str, terms: &[(i64, &str)]) -> Self {
        self.products.push((
            left.to_string(),
            right.to_string(),
            terms.iter().map(|&(c, l)| (c, l.to_string())).collect(),
        ));
        self
    }

    pub fn build(self) -> Result<Arc<GradedAlgebra>> {
        if self.modulus == 1 || (self.modulus > 1 && !crate::padic::is_prime(self.modulus)) {
            return Err(Error::NotPrime(self.modulus));
        }
        let dim = self.basis.len();
        if dim == 0 {
            return Err(Error::InvalidAlgebra("empty basis".into()));
        }
        if dim > MAX_ALGEBRA_DIM {
            return Err(Error::Resource(format!(
                "algebra `{}` has {dim} basis elements (cap {MAX_ALGEBRA_DIM})",
                self.name
            )));
        }
        let mut index = BTreeMap::new();
        for (i, (label, _)) in self.basis.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::InvalidAlgebra(format!("duplicate basis label `{label}`")));
            }
        }
        let resolve = |label: &str| -> Result<usize> {
            index
                .get(label)
                .copied()
                .ok_or_else(|| Error::InvalidAlgebra(format!("unknown basis label `{label}`")))
        };
        let unit_label = match &self.unit {
            Some(l) => l.clone(),
            None if index.contains_key("1") => "1".into(),
            None => {
                return Err(Error::InvalidAlgebra(
                    "no unit declared and no basis element labelled `1`".into(),
                ))
            }
        };
        let unit = resolve(&unit_label)?;
        let (labels, degrees): (Vec<_>, Vec<_>) = self.basis.into_iter().unzip();

        let modulus = self.modulus;
        let reduce = |c: i64| {
            if modulus == 0 {
                c
            } else {
                c.rem_euclid(modulus as i64)
            }
        };

        let mut products: Vec<Option<Vec<(u32, i64)>>> = vec![None; dim * dim];
        for (left, right, terms) in &self.products {
            let (i, j) = (resolve(left)?, resolve(right)?);
            let mut expansion = vec![0i64; dim];
            for (c, label) in terms {
                expansion[resolve(label)?] += c;
            }
            products[i * dim + j] = Some(sparsify(&expansion, reduce));
        }
        // Complete missing transposes by the Koszul sign, then fill the unit
        // row/column, then default everything else to zero.
        for i in 0..dim {
            for j in 0..dim {
                if products[i * dim + j].is_none() {
                    if let Some(t) = products[j * dim + i].clone() {
                        let sign = if degrees[i] * degrees[j] % 2 == 1 { -1 } else { 1 };
                        products[i * dim + j] = Some(
                            t.into_iter()
                                .map(|(k, c)| (k, reduce(sign * c)))
                                .filter(|&(_, c)| c != 0)
                                .collect(),
                        );
                    }
                }
            }
        }
        for k in 0..dim {
            if products[unit * dim + k].is_none() {
                products[unit * dim + k] = Some(vec![(k as u32, 1)]);
            }
            if products[k * dim + unit].is_none() {
                products[k * dim + unit] = Some(vec![(k as u32, 1)]);
            }
        }
        let products = products
            .into_iter()
            .map(|p| p.unwrap_or_default())
            .collect();

        let mut generators = Vec::new();
        for g in &self.generators {
            generators.push(resolve(g)?);
        }
        let mut annihilators = vec![0u64; dim];
        for (label, order) in &self.annihilators {
            annihilators[resolve(label)?] = *order;
        }

        Ok(Arc::new(GradedAlgebra {
            name: self.name,
            modulus,
            top_degree: self.top_degree,
            labels,
            degrees,
            unit,
            generators,
            annihilators,
            index,
            products,
        }))
    }
}

fn sparsify(dense: &[i64], reduce: impl Fn(i64) -> i64) -> Vec<(u32, i64)> {
    dense
        .iter()
        .enumerate()
        .filter_map(|(k, &c)| {
            let c = reduce(c);
            (c != 0).then_some((k as u32, c))
        })
        .collect()
}

/// An element of a [`GradedAlgebra`]: a coefficient vector over the basis,
/// reduced modulo `p`. Elements of different algebra instances never compare
/// equal.
#[derive(Debug, Clone)]
pub struct AlgebraElement {
    algebra: Arc<GradedAlgebra>,
    coeffs: Vec<i64>,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) && self.coeffs == other.coeffs
    }
}

impl Eq for AlgebraElement {}

impl AlgebraElement {
    pub fn zero(algebra: &Arc<GradedAlgebra>) -> Self {
        Self {
            algebra: algebra.clone(),
            coeffs: vec![0; algebra.dim()],
        }
    }

    pub fn basis(algebra: &Arc<GradedAlgebra>, i: usize) -> Self {
        let mut e = Self::zero(algebra);
        e.coeffs[i] = 1;
        e
    }

    pub fn unit(algebra: &Arc<GradedAlgebra>) -> Self {
        Self::basis(algebra, algebra.unit_index())
    }

    pub fn from_label(algebra: &Arc<GradedAlgebra>, label: &str) -> Result<Self> {
        let i = algebra
            .basis_index(label)
            .ok_or_else(|| Error::InvalidAlgebra(format!("unknown basis label `{label}`")))?;
        Ok(Self::basis(algebra, i))
    }

    pub fn from_coeffs(algebra: &Arc<GradedAlgebra>, coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() != algebra.dim() {
            return Err(Error::InvalidAlgebra(format!(
                "expected {} coefficients, got {}",
                algebra.dim(),
                coeffs.len()
            )));
        }
        let mut e = Self {
            algebra: algebra.clone(),
            coeffs,
        };
        e.reduce();
        Ok(e)
    }

    pub fn algebra(&self) -> &Arc<GradedAlgebra> {
        &self.algebra
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn reduce(&mut self) {
        for c in &mut self.coeffs {
            *c = self.algebra.reduce(*c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert!(Arc::ptr_eq(&self.algebra, &other.algebra), "algebra mismatch");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| self.algebra.reduce(a + b))
            .collect();
        Self {
            algebra: self.algebra.clone(),
            coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|&c| self.algebra.reduce(-c)).collect();
        Self {
            algebra: self.algebra.clone(),
            coeffs,
        }
    }

    pub fn scale(&self, s: i64) -> Self {
        let coeffs = self.coeffs.iter().map(|&c| self.algebra.reduce(c * s)).collect();
        Self {
            algebra: self.algebra.clone(),
            coeffs,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert!(Arc::ptr_eq(&self.algebra, &other.algebra), "algebra mismatch");
        let mut out = vec![0i64; self.algebra.dim()];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                for &(k, c) in self.algebra.product_terms(i, j) {
                    out[k as usize] = self.algebra.reduce(out[k as usize] + a * b * c);
                }
            }
        }
        Self {
            algebra: self.algebra.clone(),
            coeffs: out,
        }
    }

    /// `k`-th power by repeated structure-constant multiplication.
    pub fn power(&self, k: u64) -> Self {
        let mut acc = Self::unit(&self.algebra);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// The common degree of the nonzero coefficients; `None` for the zero
    /// element; an error when degrees are mixed.
    pub fn homogeneous_degree(&self) -> Result<Option<usize>> {
        let mut degrees: Vec<usize> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != 0)
            .map(|(i, _)| self.algebra.degree(i))
            .collect();
        degrees.sort_unstable();
        degrees.dedup();
        match degrees.len() {
            0 => Ok(None),
            1 => Ok(Some(degrees[0])),
            _ => Err(Error::NotHomogeneous(degrees)),
        }
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != 0)
            .map(|(i, &c)| {
                if c == 1 {
                    self.algebra.label(i).to_string()
                } else {
                    format!("{c}·{}", self.algebra.label(i))
                }
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Künneth tensor product `A ⊗ B` with the Koszul sign rule; the basis is
/// the set of pairs `(a_i, b_j)` in row-major order.
pub fn kunneth(a: &Arc<GradedAlgebra>, b: &Arc<GradedAlgebra>) -> Result<Arc<GradedAlgebra>> {
    if a.modulus() != b.modulus() {
        return Err(Error::ModulusMismatch {
            left: a.modulus(),
            right: b.modulus(),
        });
    }
    let (da, db) = (a.dim(), b.dim());
    let dim = da
        .checked_mul(db)
        .filter(|&d| d <= MAX_ALGEBRA_DIM)
        .ok_or_else(|| {
            Error::Resource(format!(
                "Künneth product of `{}` and `{}` has {} basis elements (cap {MAX_ALGEBRA_DIM})",
                a.name(),
                b.name(),
                da * db
            ))
        })?;
    let modulus = a.modulus();
    let reduce = |c: i64| {
        if modulus == 0 {
            c
        } else {
            c.rem_euclid(modulus as i64)
        }
    };

    let mut labels = Vec::with_capacity(dim);
    let mut degrees = Vec::with_capacity(dim);
    let mut index = BTreeMap::new();
    for i in 0..da {
        for j in 0..db {
            let label = format!("{}×{}", a.label(i), b.label(j));
            index.insert(label.clone(), i * db + j);
            labels.push(label);
            degrees.push(a.degree(i) + b.degree(j));
        }
    }
    let unit = a.unit_index() * db + b.unit_index();

    let mut products = vec![Vec::new(); dim * dim];
    for i in 0..da {
        for j in 0..db {
            let row = i * db + j;
            for k in 0..da {
                for l in 0..db {
                    let col = k * db + l;
                    let left = a.product_terms(i, k);
                    let right = b.product_terms(j, l);
                    if left.is_empty() || right.is_empty() {
                        continue;
                    }
                    // Koszul sign: the b_j factor moves past the a_k factor.
                    let sign = if b.degree(j) * a.degree(k) % 2 == 1 { -1 } else { 1 };
                    let mut terms = Vec::with_capacity(left.len() * right.len());
                    for &(u, cu) in left {
                        for &(v, cv) in right {
                            let c = reduce(sign * cu * cv);
                            if c != 0 {
                                terms.push(((u as usize * db + v as usize) as u32, c));
                            }
                        }
                    }
                    terms.sort_unstable_by_key(|&(k, _)| k);
                    products[row * dim + col] = terms;
                }
            }
        }
    }

    let mut generators = Vec::new();
    for &g in a.generator_indices() {
        generators.push(g * db + b.unit_index());
    }
    for &g in b.generator_indices() {
        generators.push(a.unit_index() * db + g);
    }

    Ok(Arc::new(GradedAlgebra {
        name: format!("{}×{}", a.name(), b.name()),
        modulus,
        top_degree: a.top_degree() + b.top_degree(),
        labels,
        degrees,
        unit,
        generators,
        annihilators: vec![0; dim],
        index,
        products,
    }))
}

/// The Künneth square `A ⊗ A` of a single algebra, with the zero-divisor
/// machinery: cross products, barred classes `x⊗1 − 1⊗x`, and the diagonal
/// multiplication map back to `A`.
#[derive(Debug, Clone)]
pub struct KunnethSquare {
    factor: Arc<GradedAlgebra>,
    square: Arc<GradedAlgebra>,
}

impl KunnethSquare {
    pub fn new(factor: &Arc<GradedAlgebra>) -> Result<Self> {
        Ok(Self {
            factor: factor.clone(),
            square: kunneth(factor, factor)?,
        })
    }

    pub fn factor(&self) -> &Arc<GradedAlgebra> {
        &self.factor
    }

    pub fn algebra(&self) -> &Arc<GradedAlgebra> {
        &self.square
    }

    pub fn pair_index(&self, i: usize, j: usize) -> usize {
        i * self.factor.dim() + j
    }

    /// The cross product `x ⊗ y`.
    pub fn cross(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero(&self.square);
        for (i, &a) in x.coeffs().iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.coeffs().iter().enumerate() {
                if b == 0 {
                    continue;
                }
                out.coeffs[self.pair_index(i, j)] = self.square.reduce(a * b);
            }
        }
        out
    }

    /// `bar(x) = x⊗1 − 1⊗x` for homogeneous `x`; always a zero-divisor.
    pub fn bar(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        assert!(Arc::ptr_eq(x.algebra(), &self.factor), "algebra mismatch");
        x.homogeneous_degree()?;
        let one = AlgebraElement::unit(&self.factor);
        Ok(self.cross(x, &one).sub(&self.cross(&one, x)))
    }

    pub fn bar_generator(&self, label: &str) -> Result<AlgebraElement> {
        self.bar(&AlgebraElement::from_label(&self.factor, label)?)
    }

    /// Image under the diagonal restriction `a⊗b ↦ a·b`.
    pub fn diagonal_image(&self, u: &AlgebraElement) -> AlgebraElement {
        assert!(Arc::ptr_eq(u.algebra(), &self.square), "algebra mismatch");
        let df = self.factor.dim();
        let mut out = AlgebraElement::zero(&self.factor);
        for (pair, &c) in u.coeffs().iter().enumerate() {
            if c == 0 {
                continue;
            }
            let (i, j) = (pair / df, pair % df);
            for &(k, sc) in self.factor.product_terms(i, j) {
                out.coeffs[k as usize] = self.factor.reduce(out.coeffs[k as usize] + c * sc);
            }
        }
        out
    }

    pub fn is_zero_divisor(&self, u: &AlgebraElement) -> bool {
        self.diagonal_image(u).is_zero()
    }

    /// Basis of the kernel of the diagonal restriction, over `F_p`.
    pub fn diagonal_kernel_basis(&self) -> Result<Vec<AlgebraElement>> {
        let p = self.factor.modulus();
        if p < 2 {
            return Err(Error::Unsupported(
                "kernel basis requires prime modulus coefficients".into(),
            ));
        }
        let df = self.factor.dim();
        let cols = self.square.dim();
        // Row r of the map: coefficient of factor-basis r in μ(pair c).
        let mut mat = vec![vec![0u64; cols]; df];
        for pair in 0..cols {
            let (i, j) = (pair / df, pair % df);
            for &(k, c) in self.factor.product_terms(i, j) {
                mat[k as usize][pair] = c.rem_euclid(p as i64) as u64;
            }
        }
        let kernel = fp_kernel(&mut mat, p);
        kernel
            .into_iter()
            .map(|v| {
                AlgebraElement::from_coeffs(&self.square, v.into_iter().map(|c| c as i64).collect())
            })
            .collect()
    }
}

/// Kernel of a matrix over `F_p` by row reduction; returns one basis vector
/// per free column, in column order.
fn fp_kernel(mat: &mut [Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let rows = mat.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = mat[0].len();
    let inv = |a: u64| -> u64 {
        // Fermat inverse; p is prime and a != 0.
        let mut result = 1u64;
        let mut base = a % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        result
    };
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut r = 0usize;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| mat[i][c] % p != 0) else {
            continue;
        };
        mat.swap(r, pr);
        let scale = inv(mat[r][c] % p);
        for x in mat[r].iter_mut() {
            *x = *x % p * scale % p;
        }
        for i in 0..rows {
            if i != r && mat[i][c] % p != 0 {
                let f = mat[i][c] % p;
                for cc in 0..cols {
                    mat[i][cc] = (mat[i][cc] + (p - f) * mat[r][cc]) % p;
                }
            }
        }
        pivot_of_col[c] = Some(r);
        r += 1;
    }
    let mut basis = Vec::new();
    for c in 0..cols {
        if pivot_of_col[c].is_some() {
            continue;
        }
        let mut v = vec![0u64; cols];
        v[c] = 1;
        for (pc, pr) in pivot_of_col.iter().enumerate() {
            if let Some(pr) = pr {
                v[pc] = (p - mat[*pr][c] % p) % p;
            }
        }
        basis.push(v);
    }
    basis
}

// ---------------------------------------------------------------------------
// Preset rings
// ---------------------------------------------------------------------------

/// `H^*(RP^n; Z_2) = Z_2[w]/(w^{n+1})`.
pub fn preset_rp(n: usize) -> Result<Arc<GradedAlgebra>> {
    if n == 0 {
        return Err(Error::Unsupported("preset rp requires n >= 1".into()));
    }
    let mut b = AlgebraBuilder::new(&format!("rp({n})"), 2, n).unit("1").generator("w");
    let label = |k: usize| match k {
        0 => "1".to_string(),
        1 => "w".to_string(),
        k => format!("w^{k}"),
    };
    for k in 0..=n {
        b = b.basis(&label(k), k);
    }
    for i in 1..=n {
        for j in i..=n {
            if i + j <= n {
                b = b.product(&label(i), &label(j), &[(1, &label(i + j))]);
            } else {
                b = b.product(&label(i), &label(j), &[]);
            }
        }
    }
    b.build()
}

/// Mod-3 cohomology of the `2n`-skeleton of the lens space `L_3^{2n+1}`:
/// generators `x` (degree 1) and `y` (degree 2) with `x² = 0`,
/// `y^{n+1} = 0`, `x·yⁿ = 0`; additive basis `{yᵏ} ∪ {x·yʲ, j < n}`.
pub fn preset_lens_skeleton(n: usize) -> Result<Arc<GradedAlgebra>> {
    lens_like(&format!("lens_skeleton({n})"), n, 2 * n, n.saturating_sub(1))
}

/// Mod-3 cohomology of the lens space `L_3^{2n+1}` itself:
/// `Λ(x) ⊗ Z_3[y]/(y^{n+1})`, with top class `x·yⁿ` in degree `2n+1`.
pub fn preset_lens_space(n: usize) -> Result<Arc<GradedAlgebra>> {
    lens_like(&format!("lens_space({n})"), n, 2 * n + 1, n)
}

fn lens_like(name: &str, n: usize, top: usize, max_xy: usize) -> Result<Arc<GradedAlgebra>> {
    if n == 0 {
        return Err(Error::Unsupported("lens presets require n >= 1".into()));
    }
    let y_label = |k: usize| match k {
        0 => "1".to_string(),
        1 => "y".to_string(),
        k => format!("y^{k}"),
    };
    let xy_label = |j: usize| match j {
        0 => "x".to_string(),
        1 => "xy".to_string(),
        j => format!("xy^{j}"),
    };
    let mut b = AlgebraBuilder::new(name, 3, top).unit("1").generator("x").generator("y");
    for k in 0..=n {
        b = b.basis(&y_label(k), 2 * k);
    }
    for j in 0..=max_xy {
        b = b.basis(&xy_label(j), 2 * j + 1);
    }
    // y^a · y^b, truncated above y^n.
    for a in 1..=n {
        for c in a..=n {
            let terms: Vec<(i64, String)> = if a + c <= n {
                vec![(1, y_label(a + c))]
            } else {
                vec![]
            };
            let refs: Vec<(i64, &str)> = terms.iter().map(|(c, l)| (*c, l.as_str())).collect();
            b = b.product(&y_label(a), &y_label(c), &refs);
        }
    }
    // y^a · (x y^j) = x y^{a+j}, truncated above the last xy class.
    for a in 1..=n {
        for j in 0..=max_xy {
            let terms: Vec<(i64, String)> = if a + j <= max_xy {
                vec![(1, xy_label(a + j))]
            } else {
                vec![]
            };
            let refs: Vec<(i64, &str)> = terms.iter().map(|(c, l)| (*c, l.as_str())).collect();
            b = b.product(&y_label(a), &xy_label(j), &refs);
        }
    }
    // (x y^i)(x y^j) = 0 since x² = 0.
    for i in 0..=max_xy {
        for j in i..=max_xy {
            b = b.product(&xy_label(i), &xy_label(j), &[]);
        }
    }
    b.build()
}

/// Truncated exterior algebra on `mu` degree-one generators over `Z_p`,
/// cut off above degree `d`; the cohomology of the `d`-skeleton of the
/// `mu`-torus in degrees below `d` (plumbing, no sharper claims attached).
pub fn preset_torus_skeleton(mu: usize, d: usize, p: u64) -> Result<Arc<GradedAlgebra>> {
    if mu == 0 || d == 0 {
        return Err(Error::Unsupported("preset torus_skeleton requires mu, d >= 1".into()));
    }
    if mu > 16 {
        return Err(Error::Resource(format!("torus skeleton with mu = {mu} is too large")));
    }
    // Basis: squarefree monomials of weight <= d, ordered by degree then by
    // index set.
    let mut subsets: Vec<Vec<usize>> = vec![vec![]];
    let mut frontier: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..d.min(mu) {
        let mut next = Vec::new();
        for s in &frontier {
            let start = s.last().map_or(0, |&l| l + 1);
            for e in start..mu {
                let mut t = s.clone();
                t.push(e);
                next.push(t);
            }
        }
        subsets.extend(next.iter().cloned());
        frontier = next;
    }
    let label = |s: &[usize]| -> String {
        if s.is_empty() {
            "1".to_string()
        } else {
            s.iter().map(|e| format!("e{}", e + 1)).collect::<Vec<_>>().join("")
        }
    };
    let mut b = AlgebraBuilder::new(&format!("torus_skeleton({mu},{d})"), p, d).unit("1");
    for e in 0..mu {
        b = b.generator(&format!("e{}", e + 1));
    }
    for s in &subsets {
        b = b.basis(&label(s), s.len());
    }
    for s in &subsets {
        if s.is_empty() {
            continue;
        }
        for t in &subsets {
            if t.is_empty() {
                continue;
            }
            let disjoint = s.iter().all(|e| !t.contains(e));
            let terms: Vec<(i64, String)> = if disjoint && s.len() + t.len() <= d {
                // Sign: inversions when sorting the concatenation [s, t].
                let inversions = s
                    .iter()
                    .map(|&a| t.iter().filter(|&&bb| bb < a).count())
                    .sum::<usize>();
                let sign = if inversions % 2 == 1 { -1 } else { 1 };
                let mut merged: Vec<usize> = s.iter().chain(t.iter()).copied().collect();
                merged.sort_unstable();
                vec![(sign, label(&merged))]
            } else {
                vec![]
            };
            let refs: Vec<(i64, &str)> = terms.iter().map(|(c, l)| (*c, l.as_str())).collect();
            b = b.product(&label(s), &label(t), &refs);
        }
    }
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic;

    #[test]
    fn rp_preset_examples() {
        let a2 = preset_rp(2).unwrap();
        assert!(a2.validate().is_empty());
        let w = AlgebraElement::from_label(&a2, "w").unwrap();
        let w2 = w.mul(&w);
        assert_eq!(w2, AlgebraElement::from_label(&a2, "w^2").unwrap());
        assert!(w2.mul(&w).is_zero());

        assert_eq!(preset_rp(3).unwrap().dim(), 4);

        let a1 = preset_rp(1).unwrap();
        let w = AlgebraElement::from_label(&a1, "w").unwrap();
        assert!(w.mul(&w).is_zero());
    }

    #[test]
    fn lens_skeleton_preset_examples() {
        let a1 = preset_lens_skeleton(1).unwrap();
        assert!(a1.validate().is_empty());
        assert_eq!(a1.dim(), 3); // {1, y, x}
        let x = AlgebraElement::from_label(&a1, "x").unwrap();
        let y = AlgebraElement::from_label(&a1, "y").unwrap();
        assert!(x.mul(&x).is_zero());
        assert!(x.mul(&y).is_zero());
        assert!(y.mul(&y).is_zero());

        let a2 = preset_lens_skeleton(2).unwrap();
        assert!(a2.validate().is_empty());
        let x = AlgebraElement::from_label(&a2, "x").unwrap();
        let y = AlgebraElement::from_label(&a2, "y").unwrap();
        let y2 = y.mul(&y);
        assert_eq!(y2, AlgebraElement::from_label(&a2, "y^2").unwrap());
        assert!(y.mul(&y2).is_zero());
        assert!(x.mul(&y2).is_zero());

        for n in 1..=10 {
            assert_eq!(preset_lens_skeleton(n).unwrap().dim(), 2 * n + 1);
        }
    }

    #[test]
    fn lens_space_preset_has_top_class() {
        let a = preset_lens_space(2).unwrap();
        assert!(a.validate().is_empty());
        let x = AlgebraElement::from_label(&a, "x").unwrap();
        let y = AlgebraElement::from_label(&a, "y").unwrap();
        let top = x.mul(&y.power(2));
        assert_eq!(top, AlgebraElement::from_label(&a, "xy^2").unwrap());
        assert!(x.mul(&x).is_zero());
    }

    #[test]
    fn torus_preset_validates_and_anticommutes() {
        let a = preset_torus_skeleton(4, 2, 3).unwrap();
        assert!(a.validate().is_empty());
        let e1 = AlgebraElement::from_label(&a, "e1").unwrap();
        let e2 = AlgebraElement::from_label(&a, "e2").unwrap();
        assert_eq!(e1.mul(&e2), e2.mul(&e1).neg());
        assert!(e1.mul(&e1).is_zero());
    }

    #[test]
    fn presets_validate_up_to_12() {
        for n in 1..=12 {
            assert!(preset_rp(n).unwrap().validate().is_empty(), "rp({n})");
            assert!(
                preset_lens_skeleton(n).unwrap().validate().is_empty(),
                "lens_skeleton({n})"
            );
        }
        for n in 1..=6 {
            assert!(preset_lens_space(n).unwrap().validate().is_empty());
        }
        assert!(preset_torus_skeleton(5, 2, 3).unwrap().validate().is_empty());
        assert!(preset_torus_skeleton(3, 3, 2).unwrap().validate().is_empty());
    }

    #[test]
    fn corrupted_product_is_reported() {
        // x·y and y·x both declared, violating the Koszul sign rule.
        let bad = AlgebraBuilder::new("bad", 3, 3)
            .unit("1")
            .basis("1", 0)
            .basis("x", 1)
            .basis("y", 2)
            .basis("z", 3)
            .product("x", "y", &[(1, "z")])
            .product("y", "x", &[(2, "z")]) // should be +1·z
            .product("x", "x", &[])
            .product("y", "y", &[])
            .product("z", "z", &[])
            .product("x", "z", &[])
            .product("y", "z", &[])
            .build()
            .unwrap();
        let violations = bad.validate();
        assert!(violations
            .iter()
            .any(|v| v.kind == ViolationKind::GradedCommutativity));
    }

    #[test]
    fn kunneth_signs() {
        let a = preset_lens_skeleton(1).unwrap();
        let square = kunneth(&a, &a).unwrap();
        let x1 = AlgebraElement::from_label(&square, "x×1").unwrap();
        let onex = AlgebraElement::from_label(&square, "1×x").unwrap();
        let xx = AlgebraElement::from_label(&square, "x×x").unwrap();
        // (x⊗1)(1⊗x) = x⊗x; (1⊗x)(x⊗1) = −x⊗x = 2·x⊗x mod 3.
        assert_eq!(x1.mul(&onex), xx);
        assert_eq!(onex.mul(&x1), xx.scale(2));
        // Independent sign bookkeeping: moving x past x introduces (−1)^{1·1}.
        let koszul_sign: i64 = if (1 * 1) % 2 == 1 { -1 } else { 1 };
        assert_eq!(onex.mul(&x1), xx.scale(koszul_sign.rem_euclid(3)));

        let unit = AlgebraElement::unit(&square);
        assert_eq!(unit, AlgebraElement::from_label(&square, "1×1").unwrap());
        assert_eq!(unit.mul(&xx), xx);
    }

    #[test]
    fn kunneth_requires_equal_moduli() {
        let a = preset_rp(2).unwrap();
        let b = preset_lens_skeleton(1).unwrap();
        assert!(matches!(kunneth(&a, &b), Err(Error::ModulusMismatch { .. })));
    }

    #[test]
    fn bar_examples() {
        let a = preset_lens_skeleton(1).unwrap();
        let sq = KunnethSquare::new(&a).unwrap();
        let bar_x = sq.bar_generator("x").unwrap();
        let expected = AlgebraElement::from_label(sq.algebra(), "x×1")
            .unwrap()
            .add(&AlgebraElement::from_label(sq.algebra(), "1×x").unwrap().scale(2));
        assert_eq!(bar_x, expected);

        let one = AlgebraElement::unit(&a);
        assert!(sq.bar(&one).unwrap().is_zero());

        let bar_y = sq.bar_generator("y").unwrap();
        assert!(sq.diagonal_image(&bar_y).is_zero());
    }

    #[test]
    fn bar_rejects_mixed_degrees() {
        let a = preset_lens_skeleton(1).unwrap();
        let sq = KunnethSquare::new(&a).unwrap();
        let x = AlgebraElement::from_label(&a, "x").unwrap();
        let y = AlgebraElement::from_label(&a, "y").unwrap();
        assert!(matches!(
            sq.bar(&x.add(&y)),
            Err(Error::NotHomogeneous(_))
        ));
    }

    #[test]
    fn bar_of_every_basis_class_is_a_zero_divisor() {
        let presets: Vec<Arc<GradedAlgebra>> = vec![
            preset_rp(4).unwrap(),
            preset_lens_skeleton(3).unwrap(),
            preset_lens_space(2).unwrap(),
            preset_torus_skeleton(3, 2, 3).unwrap(),
        ];
        for a in presets {
            let sq = KunnethSquare::new(&a).unwrap();
            for i in 0..a.dim() {
                let b = AlgebraElement::basis(&a, i);
                let bar = sq.bar(&b).unwrap();
                assert!(sq.is_zero_divisor(&bar), "{} in {}", a.label(i), a.name());
            }
        }
    }

    #[test]
    fn power_examples() {
        // Lens skeleton, n = 1: bar(y)² = y⊗y (mod 3), nonzero.
        let a = preset_lens_skeleton(1).unwrap();
        let sq = KunnethSquare::new(&a).unwrap();
        let bar_y = sq.bar_generator("y").unwrap();
        let sqr = bar_y.power(2);
        assert_eq!(sqr, AlgebraElement::from_label(sq.algebra(), "y×y").unwrap());

        // RP²: bar(w)³ = w⊗w² + w²⊗w; bar(w)⁴ = 0.
        let r = preset_rp(2).unwrap();
        let sq = KunnethSquare::new(&r).unwrap();
        let bar_w = sq.bar_generator("w").unwrap();
        let cube = bar_w.power(3);
        let expected = AlgebraElement::from_label(sq.algebra(), "w×w^2")
            .unwrap()
            .add(&AlgebraElement::from_label(sq.algebra(), "w^2×w").unwrap());
        assert_eq!(cube, expected);
        assert!(bar_w.power(4).is_zero());
    }

    // bar(y)^{2n} = (−1)^n C(2n, n) yⁿ⊗yⁿ mod 3, coefficient from the
    // independent big-integer oracle.
    #[test]
    fn power_formula_matches_binomial_oracle() {
        for n in 1..=5usize {
            let a = preset_lens_skeleton(n).unwrap();
            let sq = KunnethSquare::new(&a).unwrap();
            let bar_y = sq.bar_generator("y").unwrap();
            let got = bar_y.power(2 * n as u64);
            let c = padic::residue(&padic::binom_exact(2 * n as u64, n as u64).unwrap(), 3) as i64;
            let sign = if n % 2 == 1 { -1 } else { 1 };
            let y = AlgebraElement::from_label(&a, "y").unwrap();
            let yn = y.power(n as u64);
            let expected = sq.cross(&yn, &yn).scale(sign * c);
            assert_eq!(got, expected, "n = {n}");
        }
    }

    // Freshman's dream over Z₂: bar(u)² = u²⊗1 + 1⊗u².
    #[test]
    fn freshmans_dream_mod_two() {
        let a = preset_rp(5).unwrap();
        let sq = KunnethSquare::new(&a).unwrap();
        let one = AlgebraElement::unit(&a);
        for i in 0..a.dim() {
            let u = AlgebraElement::basis(&a, i);
            let u2 = u.mul(&u);
            let lhs = sq.bar(&u).unwrap().power(2);
            let rhs = sq.cross(&u2, &one).add(&sq.cross(&one, &u2));
            assert_eq!(lhs, rhs, "{}", a.label(i));
        }
    }

    #[test]
    fn diagonal_kernel_contains_bars() {
        let a = preset_lens_skeleton(1).unwrap();
        let sq = KunnethSquare::new(&a).unwrap();
        let kernel = sq.diagonal_kernel_basis().unwrap();
        // dim(A⊗A) − rank(μ) = 9 − 3.
        assert_eq!(kernel.len(), 6);
        for v in &kernel {
            assert!(sq.is_zero_divisor(v));
        }
    }
}
