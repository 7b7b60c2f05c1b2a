//! Integral group rings of finite cyclic groups and their bimodules.
//!
//! For a finite cyclic group `G` the augmentation ideal `I = ker(ε)` of
//! `Z[G]` becomes a left `Z[G×G]`-module via `(g, h)·x = g x h⁻¹`. This
//! module, the regular bimodule `Z[G]`, tensor squares, the swap map, and
//! the wedge/symmetric decomposition of `I⊗I` for the order-3 group are all
//! realized here as explicit integer matrices, so every identity the rest of
//! the crate relies on can be checked exhaustively.

use crate::error::{Error, Result};
use crate::matrix::IntMat;

/// Finite cyclic group of order `m`; element `i` stands for `tⁱ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclicGroup {
    order: usize,
}

impl CyclicGroup {
    pub fn new(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::Unsupported("group order must be >= 1".into()));
        }
        Ok(Self { order })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        (a + b) % self.order
    }

    pub fn inv(&self, a: usize) -> usize {
        (self.order - a % self.order) % self.order
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order
    }
}

/// Element of `Z[G]` for cyclic `G`: `coefficients[i]` multiplies `tⁱ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRingElement {
    group: CyclicGroup,
    coefficients: Vec<i64>,
}

impl GroupRingElement {
    pub fn zero(group: CyclicGroup) -> Self {
        Self {
            group,
            coefficients: vec![0; group.order()],
        }
    }

    pub fn one(group: CyclicGroup) -> Self {
        Self::basis(group, 0)
    }

    /// The group element `tⁱ` as a ring element.
    pub fn basis(group: CyclicGroup, i: usize) -> Self {
        let mut coefficients = vec![0; group.order()];
        coefficients[i % group.order()] = 1;
        Self {
            group,
            coefficients,
        }
    }

    pub fn from_coefficients(group: CyclicGroup, coefficients: Vec<i64>) -> Result<Self> {
        if coefficients.len() != group.order() {
            return Err(Error::Unsupported(format!(
                "expected {} coefficients, got {}",
                group.order(),
                coefficients.len()
            )));
        }
        Ok(Self {
            group,
            coefficients,
        })
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.group, other.group);
        let coefficients = self
            .coefficients
            .iter()
            .zip(&other.coefficients)
            .map(|(a, b)| a + b)
            .collect();
        Self {
            group: self.group,
            coefficients,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.group, other.group);
        let coefficients = self
            .coefficients
            .iter()
            .zip(&other.coefficients)
            .map(|(a, b)| a - b)
            .collect();
        Self {
            group: self.group,
            coefficients,
        }
    }

    /// Cyclic convolution.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.group, other.group);
        let m = self.group.order();
        let mut coefficients = vec![0i64; m];
        for (i, &a) in self.coefficients.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coefficients.iter().enumerate() {
                coefficients[(i + j) % m] += a * b;
            }
        }
        Self {
            group: self.group,
            coefficients,
        }
    }

    /// The augmentation `ε`, the sum of coefficients.
    pub fn augmentation(&self) -> i64 {
        self.coefficients.iter().sum()
    }

    /// Coordinates in the canonical basis `{tⁱ − 1 : 1 ≤ i ≤ m−1}` of the
    /// augmentation ideal; `None` when the element is not in the ideal.
    pub fn ideal_coordinates(&self) -> Option<Vec<i64>> {
        if self.augmentation() != 0 {
            return None;
        }
        Some(self.coefficients[1..].to_vec())
    }
}

/// A `Z[G×G]`-module for cyclic `G`, given by commuting matrices for the
/// generators `(t, 1)` and `(1, t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BimoduleAction {
    group: CyclicGroup,
    act_left: IntMat,
    act_right: IntMat,
}

impl BimoduleAction {
    /// Builds the module and checks the action axioms: both matrices have
    /// order dividing `|G|` and commute with each other.
    pub fn new(group: CyclicGroup, act_left: IntMat, act_right: IntMat) -> Result<Self> {
        let module = Self {
            group,
            act_left,
            act_right,
        };
        module.verify_axioms()?;
        Ok(module)
    }

    pub fn trivial(group: CyclicGroup, rank: usize) -> Self {
        Self {
            group,
            act_left: IntMat::identity(rank),
            act_right: IntMat::identity(rank),
        }
    }

    /// `Z[G]` with the action `(g, h)·x = g x h⁻¹` in the basis `{tⁱ}`.
    pub fn regular(group: CyclicGroup) -> Self {
        let m = group.order();
        let mut left = IntMat::zeros(m, m);
        let mut right = IntMat::zeros(m, m);
        for i in 0..m {
            left.set((i + 1) % m, i, 1); // t·tⁱ = t^{i+1}
            right.set((i + m - 1) % m, i, 1); // tⁱ·t⁻¹ = t^{i-1}
        }
        Self {
            group,
            act_left: left,
            act_right: right,
        }
    }

    pub fn group(&self) -> CyclicGroup {
        self.group
    }

    pub fn rank(&self) -> usize {
        self.act_left.rows()
    }

    pub fn act_left(&self) -> &IntMat {
        &self.act_left
    }

    pub fn act_right(&self) -> &IntMat {
        &self.act_right
    }

    /// Applies `(t^g, t^h)` to a coordinate vector.
    pub fn apply(&self, g: usize, h: usize, v: &[i64]) -> Vec<i64> {
        let lv = self.act_left.pow(g % self.group.order()).mul_vec(v);
        self.act_right.pow(h % self.group.order()).mul_vec(&lv)
    }

    pub fn verify_axioms(&self) -> Result<()> {
        let m = self.group.order();
        if self.act_left.rows() != self.act_left.cols()
            || self.act_right.rows() != self.act_right.cols()
            || self.act_left.rows() != self.act_right.rows()
        {
            return Err(Error::Unsupported("action matrices must be square of equal size".into()));
        }
        if !self.act_left.pow(m).is_identity() {
            return Err(Error::Internal(format!("act_left^{m} is not the identity")));
        }
        if !self.act_right.pow(m).is_identity() {
            return Err(Error::Internal(format!("act_right^{m} is not the identity")));
        }
        if self.act_left.mul(&self.act_right) != self.act_right.mul(&self.act_left) {
            return Err(Error::Internal("left and right actions do not commute".into()));
        }
        Ok(())
    }
}

/// The augmentation ideal `I ⊂ Z[G]` in the canonical basis
/// `{tⁱ − 1 : 1 ≤ i ≤ m−1}`, with the bimodule action `(g, h)·x = g x h⁻¹`.
///
/// For the trivial group the ideal is the zero module of rank 0.
pub fn augmentation_ideal(group: CyclicGroup) -> BimoduleAction {
    let m = group.order();
    let rank = m.saturating_sub(1);
    let mut left = IntMat::zeros(rank, rank);
    let mut right = IntMat::zeros(rank, rank);
    // (t,1)·(tⁱ−1) = t^{i+1} − t = (t^{i+1}−1) − (t−1), with t^m − 1 = 0.
    // (1,t)·(tⁱ−1) = t^{i-1} − t^{m-1} = (t^{i-1}−1) − (t^{m-1}−1).
    for i in 1..m {
        let col = i - 1;
        if i + 1 < m {
            left.set(i, col, 1); // row index (i+1)-1
        }
        left.set(0, col, left.get(0, col) - 1);
        if i >= 2 {
            right.set(i - 2, col, 1);
        }
        right.set(rank - 1, col, right.get(rank - 1, col) - 1);
    }
    BimoduleAction {
        group,
        act_left: left,
        act_right: right,
    }
}

/// The order-3 augmentation ideal in the basis `α = t − 1`, `β = t² − t`,
/// together with the change of basis into the canonical `{t−1, t²−1}`
/// coordinates (columns are the basis vectors `α`, `β`).
pub fn augmentation_ideal_z3_paper() -> (BimoduleAction, IntMat) {
    let group = CyclicGroup::new(3).expect("order 3");
    // (t,1): α ↦ β, β ↦ −α−β;  (1,t): α ↦ −α−β, β ↦ α.
    let left = IntMat::from_rows(vec![vec![0, -1], vec![1, -1]]);
    let right = IntMat::from_rows(vec![vec![-1, 1], vec![-1, 0]]);
    let change = IntMat::from_rows(vec![vec![1, -1], vec![0, 1]]); // α = b₁, β = b₂ − b₁
    (
        BimoduleAction {
            group,
            act_left: left,
            act_right: right,
        },
        change,
    )
}

/// The crossed homomorphism `f(g, h) = g h⁻¹ − 1` with values in the
/// augmentation ideal, stored in canonical coordinates.
#[derive(Debug, Clone)]
pub struct CrossedHom {
    group: CyclicGroup,
    target: BimoduleAction,
    values: Vec<Vec<i64>>, // indexed by g * m + h
}

pub fn canonical_crossed_hom(group: CyclicGroup) -> CrossedHom {
    let target = augmentation_ideal(group);
    let m = group.order();
    let rank = target.rank();
    let mut values = Vec::with_capacity(m * m);
    for g in 0..m {
        for h in 0..m {
            let d = group.mul(g, group.inv(h)); // g h⁻¹ = t^d
            let mut v = vec![0i64; rank];
            if d > 0 {
                v[d - 1] = 1; // t^d − 1 is the basis vector b_d
            }
            values.push(v);
        }
    }
    CrossedHom {
        group,
        target,
        values,
    }
}

impl CrossedHom {
    pub fn group(&self) -> CyclicGroup {
        self.group
    }

    pub fn target(&self) -> &BimoduleAction {
        &self.target
    }

    pub fn value(&self, g: usize, h: usize) -> &[i64] {
        &self.values[(g % self.group.order()) * self.group.order() + (h % self.group.order())]
    }

    /// Checks `f((g,h)(g',h')) = f(g,h) + (g,h)·f(g',h')` over every
    /// quadruple, returning the first violating one.
    pub fn check_identity(&self) -> std::result::Result<(), (usize, usize, usize, usize)> {
        let m = self.group.order();
        for g in 0..m {
            for h in 0..m {
                for g2 in 0..m {
                    for h2 in 0..m {
                        let lhs = self.value(self.group.mul(g, g2), self.group.mul(h, h2));
                        let acted = self.target.apply(g, h, self.value(g2, h2));
                        let rhs: Vec<i64> = self
                            .value(g, h)
                            .iter()
                            .zip(&acted)
                            .map(|(a, b)| a + b)
                            .collect();
                        if lhs != rhs.as_slice() {
                            return Err((g, h, g2, h2));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The diagonal restriction `g ↦ f(g, g)` must vanish identically.
    pub fn vanishes_on_diagonal(&self) -> bool {
        self.group
            .elements()
            .all(|g| self.value(g, g).iter().all(|&c| c == 0))
    }
}

/// Z-basis of the submodule fixed by the whole `G×G`-action, computed as the
/// integer kernel of the stacked matrices `(L − 1; R − 1)`.
pub fn invariants(module: &BimoduleAction) -> Vec<Vec<i64>> {
    let r = module.rank();
    if r == 0 {
        return Vec::new();
    }
    let id = IntMat::identity(r);
    let stacked = module
        .act_left
        .sub(&id)
        .stack_vertical(&module.act_right.sub(&id));
    stacked.kernel_basis()
}

/// Additive order of the canonical degree-one class for cyclic `G`: the
/// augmentation of the generator of the invariants of `Z[G]`, which is `|G|`.
///
/// This replays the connecting-homomorphism argument in module-level terms:
/// the invariants of `Z[G]` are generated by the norm element `N = Σ g`, and
/// `ε(N) = |G|` is the index of the image of `ε` on invariants, i.e. the
/// order of the class. For the trivial group the order is 1 (the class is
/// zero).
pub fn order_of_canonical_class(group: CyclicGroup) -> u64 {
    let basis = invariants(&BimoduleAction::regular(group));
    assert_eq!(basis.len(), 1, "Z[G] has a rank-one invariant lattice");
    basis[0].iter().sum::<i64>().unsigned_abs()
}

/// Tensor product over Z with the diagonal `G×G`-action; basis vector
/// `e_i ⊗ f_j` sits at index `i * rank(N) + j`.
pub fn tensor_product(m: &BimoduleAction, n: &BimoduleAction) -> Result<BimoduleAction> {
    if m.group != n.group {
        return Err(Error::GroupMismatch {
            left: m.group.order(),
            right: n.group.order(),
        });
    }
    Ok(BimoduleAction {
        group: m.group,
        act_left: m.act_left.kronecker(&n.act_left),
        act_right: m.act_right.kronecker(&n.act_right),
    })
}

/// The factor-swapping map `T` on `M ⊗ M`: `e_i ⊗ e_j ↦ e_j ⊗ e_i`.
pub fn swap_map(module: &BimoduleAction) -> IntMat {
    let r = module.rank();
    let mut t = IntMat::zeros(r * r, r * r);
    for i in 0..r {
        for j in 0..r {
            t.set(j * r + i, i * r + j, 1);
        }
    }
    t
}

/// The decomposition `0 → I∧I → I⊗I → S(I) → 0` for the rank-2 order-3
/// augmentation ideal, together with the alternation map `A(x) = x − T(x)`.
#[derive(Debug, Clone)]
pub struct WedgeSymmetric {
    /// `I∧I`, rank 1 with the trivial action.
    pub wedge: BimoduleAction,
    /// The symmetric square `S(I) = (I⊗I)/(I∧I)`, rank 3.
    pub symmetric: BimoduleAction,
    /// Inclusion `i : I∧I → I⊗I` (4×1).
    pub inclusion: IntMat,
    /// Projection `j : I⊗I → S(I)` (3×4).
    pub projection: IntMat,
    /// Alternation `A : I⊗I → I∧I` (1×4); `A∘i` is multiplication by 2.
    pub alternation: IntMat,
    tensor: BimoduleAction,
    section: IntMat,
}

pub fn wedge_and_symmetric(ideal: &BimoduleAction) -> Result<WedgeSymmetric> {
    if ideal.group.order() != 3 || ideal.rank() != 2 {
        return Err(Error::Unsupported(
            "wedge/symmetric decomposition is implemented for the rank-2 order-3 ideal".into(),
        ));
    }
    let tensor = tensor_product(ideal, ideal)?;
    // Generator e₁⊗e₂ − e₂⊗e₁ of the wedge, in tensor coordinates.
    let generator = vec![0i64, 1, -1, 0];
    for (name, mat) in [("left", &tensor.act_left), ("right", &tensor.act_right)] {
        if mat.mul_vec(&generator) != generator {
            return Err(Error::Unsupported(format!(
                "the {name} action does not fix the wedge generator; not an augmentation ideal"
            )));
        }
    }
    let inclusion = IntMat::column(&generator);
    // Quotient basis: classes of e₁⊗e₁, e₁⊗e₂, e₂⊗e₂ (e₂⊗e₁ ≡ e₁⊗e₂).
    let projection = IntMat::from_rows(vec![
        vec![1, 0, 0, 0],
        vec![0, 1, 1, 0],
        vec![0, 0, 0, 1],
    ]);
    let section = IntMat::from_rows(vec![
        vec![1, 0, 0],
        vec![0, 1, 0],
        vec![0, 0, 0],
        vec![0, 0, 1],
    ]);
    let alternation = IntMat::from_rows(vec![vec![0, 1, -1, 0]]);
    let symmetric = BimoduleAction::new(
        ideal.group,
        projection.mul(&tensor.act_left).mul(&section),
        projection.mul(&tensor.act_right).mul(&section),
    )?;
    let result = WedgeSymmetric {
        wedge: BimoduleAction::trivial(ideal.group, 1),
        symmetric,
        inclusion,
        projection,
        alternation,
        tensor,
        section,
    };
    result.verify()?;
    Ok(result)
}

impl WedgeSymmetric {
    pub fn tensor(&self) -> &BimoduleAction {
        &self.tensor
    }

    /// Re-runs every exactness and equivariance identity as exact
    /// integer-matrix checks.
    pub fn verify(&self) -> Result<()> {
        let fail = |msg: &str| Err(Error::Internal(msg.into()));
        if !self.projection.mul(&self.inclusion).is_zero() {
            return fail("j∘i != 0");
        }
        // ker(j) is exactly the lattice spanned by the wedge generator.
        let kernel = self.projection.kernel_basis();
        let gen: Vec<i64> = (0..4).map(|i| self.inclusion.get(i, 0)).collect();
        let neg: Vec<i64> = gen.iter().map(|x| -x).collect();
        if kernel.len() != 1 || (kernel[0] != gen && kernel[0] != neg) {
            return fail("ker(j) is not spanned by the wedge generator");
        }
        if !self.projection.mul(&self.section).is_identity() {
            return fail("j is not surjective onto the chosen basis");
        }
        // Equivariance of j and triviality of the wedge action.
        for act in [&self.tensor.act_left, &self.tensor.act_right] {
            if act.mul_vec(&gen) != gen {
                return fail("wedge action is not trivial");
            }
            if self.alternation.mul(act) != self.alternation {
                return fail("alternation map is not equivariant");
            }
        }
        // Genuine quotient equivariance: j ∘ (action on I⊗I) = (action on S(I)) ∘ j.
        if self.projection.mul(&self.tensor.act_left)
            != self.symmetric.act_left().mul(&self.projection)
            || self.projection.mul(&self.tensor.act_right)
                != self.symmetric.act_right().mul(&self.projection)
        {
            return fail("symmetric action does not descend from the tensor action");
        }
        // The swap map is equivariant and A∘i is multiplication by 2.
        let t = swap_map_from_rank(2);
        for act in [&self.tensor.act_left, &self.tensor.act_right] {
            if t.mul(act) != act.mul(&t) {
                return fail("swap map is not equivariant");
            }
        }
        let a_i = self.alternation.mul(&self.inclusion);
        if a_i.get(0, 0) != 2 {
            return fail("A∘i is not multiplication by 2");
        }
        Ok(())
    }
}

fn swap_map_from_rank(r: usize) -> IntMat {
    let mut t = IntMat::zeros(r * r, r * r);
    for i in 0..r {
        for j in 0..r {
            t.set(j * r + i, i * r + j, 1);
        }
    }
    t
}
