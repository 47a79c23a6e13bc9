//! Finitely presented modules and the maps between them.
//!
//! A [`PresentedModule`] is `R^g / rowspan(rels)`. Elements are coordinate
//! vectors of length `g`; relations are stored in canonical echelon form, so
//! two presentations are equal exactly when their relation bases coincide.
//! A [`ModuleMap`] stores the image of each domain generator as a column.

use std::fmt;

use crate::error::{dim_err, Error, Result};
use crate::linalg::{LeftSolver, Span};
use crate::matrix::Matrix;
use crate::normal_form::smith;
use crate::ring::Ring;

#[derive(Clone)]
pub struct PresentedModule<R: Ring> {
    ring: R,
    gens: usize,
    rels: Span<R>,
    ambient: Option<Box<Embedding<R>>>,
}

/// An injective map of the module into a larger one.
#[derive(Debug, Clone)]
pub struct Embedding<R: Ring> {
    pub target: PresentedModule<R>,
    /// `target.gens() x module.gens()`.
    pub matrix: Matrix<R>,
}

impl<R: Ring> PartialEq for PresentedModule<R> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.gens == other.gens && self.rels == other.rels
    }
}

impl<R: Ring> Eq for PresentedModule<R> {}

impl<R: Ring> fmt::Debug for PresentedModule<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PresentedModule")
            .field("gens", &self.gens)
            .field("rels", self.rels.basis())
            .field("has_ambient", &self.ambient.is_some())
            .finish()
    }
}

impl<R: Ring> PresentedModule<R> {
    pub fn new(ring: &R, gens: usize, rels: &Matrix<R>) -> Self {
        assert_eq!(rels.cols(), gens, "relation width must equal generator count");
        Self { ring: ring.clone(), gens, rels: Span::new(rels), ambient: None }
    }

    pub fn free(ring: &R, gens: usize) -> Self {
        Self { ring: ring.clone(), gens, rels: Span::empty(ring, gens), ambient: None }
    }

    pub fn zero(ring: &R) -> Self {
        Self::free(ring, 0)
    }

    /// `R / (d)`.
    pub fn cyclic(ring: &R, d: &R::Elem) -> Self {
        Self::new(ring, 1, &Matrix::from_vec(ring, 1, 1, vec![d.clone()]))
    }

    /// Attaches an embedding into `target`; the matrix must be a well-defined injective map.
    pub fn with_ambient(mut self, target: PresentedModule<R>, matrix: Matrix<R>) -> Result<Self> {
        let map = ModuleMap::new(&self.without_ambient(), &target, matrix.clone())?;
        if !map.is_injective() {
            return Err(Error::NotWellDefined("ambient embedding is not injective".into()));
        }
        self.ambient = Some(Box::new(Embedding { target, matrix }));
        Ok(self)
    }

    pub(crate) fn with_ambient_unchecked(mut self, target: PresentedModule<R>, matrix: Matrix<R>) -> Self {
        self.ambient = Some(Box::new(Embedding { target, matrix }));
        self
    }

    pub fn without_ambient(&self) -> Self {
        Self { ring: self.ring.clone(), gens: self.gens, rels: self.rels.clone(), ambient: None }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn gens(&self) -> usize {
        self.gens
    }

    pub fn relations(&self) -> &Matrix<R> {
        self.rels.basis()
    }

    pub fn relation_span(&self) -> &Span<R> {
        &self.rels
    }

    pub fn ambient(&self) -> Option<&Embedding<R>> {
        self.ambient.as_deref()
    }

    /// The ambient embedding as a map.
    pub fn inclusion(&self) -> Option<ModuleMap<R>> {
        self.ambient.as_ref().map(|e| ModuleMap::new_unchecked(&self.without_ambient(), &e.target, e.matrix.clone()))
    }

    pub fn has_free_presentation(&self) -> bool {
        self.rels.basis().rows() == 0
    }

    /// Canonical representative of the element with coordinates `v`.
    pub fn residue(&self, v: &[R::Elem]) -> Vec<R::Elem> {
        self.rels.residue(v)
    }

    pub fn is_zero_element(&self, v: &[R::Elem]) -> bool {
        self.rels.contains(v)
    }

    pub fn elements_equal(&self, a: &[R::Elem], b: &[R::Elem]) -> bool {
        let d: Vec<R::Elem> = a.iter().zip(b).map(|(x, y)| self.ring.sub(x, y)).collect();
        self.is_zero_element(&d)
    }

    pub fn generator(&self, i: usize) -> Vec<R::Elem> {
        let mut v = vec![self.ring.zero(); self.gens];
        v[i] = self.ring.one();
        v
    }

    pub fn is_zero(&self) -> bool {
        (0..self.gens).all(|i| self.is_zero_element(&self.generator(i)))
    }

    pub fn identity_map(&self) -> ModuleMap<R> {
        ModuleMap::identity(self)
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::new(&self.ring, self.gens + other.gens, &self.relations().block_diag(other.relations()))
    }

    /// `self (x) other` on generators `g_i (x) h_j -> i * other.gens() + j`.
    pub fn tensor(&self, other: &Self) -> Self {
        let r = &self.ring;
        let a = self.relations().kron(&Matrix::identity(r, other.gens));
        let b = Matrix::identity(r, self.gens).kron(other.relations());
        Self::new(r, self.gens * other.gens, &a.vstack(&b))
    }

    /// `Hom_R(self, R)`, embedded in `R^gens` by the values on generators.
    pub fn dual(&self) -> Self {
        let rels = self.relations();
        let f = ModuleMap::new_unchecked(
            &Self::free(&self.ring, self.gens),
            &Self::free(&self.ring, rels.rows()),
            rels.clone(),
        );
        f.kernel()
    }

    /// Invariant-factor decomposition of the module.
    pub fn structure(&self) -> ModuleStructure<R> {
        let m = self.minimize();
        let mut factors = Vec::new();
        let mut free_rank = 0;
        let rels = m.module.relations();
        for i in 0..m.module.gens {
            let d = (0..rels.rows()).find_map(|k| {
                let e = rels.get(k, i);
                (!self.ring.is_zero(e)).then(|| e.clone())
            });
            match d {
                Some(d) => factors.push(d),
                None => free_rank += 1,
            }
        }
        ModuleStructure { ring: self.ring.clone(), torsion: factors, free_rank }
    }

    /// Smith-reduced presentation `R/(d_1) + ... + R^f` with mutually inverse maps.
    pub fn minimize(&self) -> Minimized<R> {
        let r = &self.ring;
        let s = smith(self.relations());
        let k = s.diag.rows().min(s.diag.cols());
        let factor = |i: usize| if i < k { s.diag.get(i, i).clone() } else { r.zero() };
        let kept: Vec<usize> = (0..self.gens).filter(|&i| !r.is_unit(&factor(i))).collect();
        let mut rel_rows = Vec::new();
        for (a, &i) in kept.iter().enumerate() {
            let d = factor(i);
            if !r.is_zero(&d) {
                let mut row = vec![r.zero(); kept.len()];
                row[a] = d;
                rel_rows.push(row);
            }
        }
        let module = Self::new(r, kept.len(), &Matrix::from_rows(r, kept.len(), rel_rows));
        let to = Matrix::from_fn(r, kept.len(), self.gens, |a, i| s.v.get(i, kept[a]).clone());
        let from = Matrix::from_fn(r, self.gens, kept.len(), |i, a| s.v_inv.get(kept[a], i).clone());
        let plain = self.without_ambient();
        Minimized {
            to_min: ModuleMap::new_unchecked(&plain, &module, to),
            from_min: ModuleMap::new_unchecked(&module, &plain, from),
            module,
        }
    }

    /// Number of elements, for finite modules over finite rings.
    pub fn cardinality(&self) -> Option<u128> {
        let n = self.ring.elements()?.len() as u128;
        let st = self.structure();
        let mut total: u128 = n.checked_pow(st.free_rank as u32)?;
        for d in &st.torsion {
            let di = self.ring.to_integer(d)?;
            let size: u128 = num_integer::Integer::gcd(&di, &num_bigint::BigInt::from(n)).try_into().ok()?;
            total = total.checked_mul(size)?;
        }
        Some(total)
    }
}

/// Result of [`PresentedModule::minimize`].
#[derive(Debug, Clone)]
pub struct Minimized<R: Ring> {
    pub module: PresentedModule<R>,
    pub to_min: ModuleMap<R>,
    pub from_min: ModuleMap<R>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleStructure<R: Ring> {
    pub ring: R,
    /// Nonzero non-unit invariant factors, each dividing the next.
    pub torsion: Vec<R::Elem>,
    pub free_rank: usize,
}

impl<R: Ring> fmt::Display for ModuleStructure<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.ring.descriptor().to_string();
        let mut parts: Vec<String> = Vec::new();
        if self.free_rank == 1 {
            parts.push(name.clone());
        } else if self.free_rank > 1 {
            parts.push(format!("{name}^{}", self.free_rank));
        }
        let base = match self.ring.descriptor() {
            crate::ring::RingDescriptor::IntegersMod(_) => "Z".to_string(),
            _ => name,
        };
        for d in &self.torsion {
            parts.push(format!("{base}/{d}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// A homomorphism of presented modules, column `j` = image of generator `j`.
#[derive(Clone)]
pub struct ModuleMap<R: Ring> {
    domain: PresentedModule<R>,
    codomain: PresentedModule<R>,
    matrix: Matrix<R>,
}

impl<R: Ring> fmt::Debug for ModuleMap<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ModuleMap")
            .field("domain", &self.domain)
            .field("codomain", &self.codomain)
            .field("matrix", &self.matrix)
            .finish()
    }
}

/// Solves `f(x) = b` in the codomain of a fixed map.
pub struct Preimage<R: Ring> {
    domain_gens: usize,
    solver: LeftSolver<R>,
}

impl<R: Ring> Preimage<R> {
    pub fn new(f: &ModuleMap<R>) -> Self {
        let stacked = f.matrix.transpose().vstack(f.codomain.relations());
        Self { domain_gens: f.domain.gens, solver: LeftSolver::new(&stacked) }
    }

    pub fn solve(&self, b: &[R::Elem]) -> Option<Vec<R::Elem>> {
        self.solver.solve(b).map(|mut x| {
            x.truncate(self.domain_gens);
            x
        })
    }

    /// Domain vectors mapping into the codomain relations (spans the preimage of zero).
    pub fn kernel_vectors(&self) -> Matrix<R> {
        let k = self.solver.kernel();
        k.submatrix(0..k.rows(), 0..self.domain_gens)
    }
}

impl<R: Ring> ModuleMap<R> {
    /// Checked constructor: shapes must agree and relations must map to relations.
    pub fn new(domain: &PresentedModule<R>, codomain: &PresentedModule<R>, matrix: Matrix<R>) -> Result<Self> {
        if matrix.shape() != (codomain.gens, domain.gens) {
            return Err(dim_err(
                "module map",
                format!("matrix is {:?}, expected {}x{}", matrix.shape(), codomain.gens, domain.gens),
            ));
        }
        let m = Self::new_unchecked(domain, codomain, matrix);
        if !m.is_well_defined() {
            return Err(Error::NotWellDefined("a domain relation maps outside the codomain relations".into()));
        }
        Ok(m)
    }

    pub fn new_unchecked(domain: &PresentedModule<R>, codomain: &PresentedModule<R>, matrix: Matrix<R>) -> Self {
        debug_assert_eq!(matrix.shape(), (codomain.gens, domain.gens));
        Self { domain: domain.without_ambient(), codomain: codomain.without_ambient(), matrix }
    }

    pub fn identity(m: &PresentedModule<R>) -> Self {
        Self::new_unchecked(m, m, Matrix::identity(&m.ring, m.gens))
    }

    pub fn zero(domain: &PresentedModule<R>, codomain: &PresentedModule<R>) -> Self {
        Self::new_unchecked(domain, codomain, Matrix::zeros(&domain.ring, codomain.gens, domain.gens))
    }

    pub fn domain(&self) -> &PresentedModule<R> {
        &self.domain
    }

    pub fn codomain(&self) -> &PresentedModule<R> {
        &self.codomain
    }

    pub fn matrix(&self) -> &Matrix<R> {
        &self.matrix
    }

    pub fn ring(&self) -> &R {
        &self.domain.ring
    }

    pub fn is_well_defined(&self) -> bool {
        let rels = self.domain.relations();
        (0..rels.rows()).all(|i| self.codomain.is_zero_element(&self.matrix.mul_vec(rels.row(i))))
    }

    pub fn apply(&self, v: &[R::Elem]) -> Vec<R::Elem> {
        self.matrix.mul_vec(v)
    }

    /// `self` after `inner`.
    pub fn compose(&self, inner: &ModuleMap<R>) -> ModuleMap<R> {
        assert_eq!(inner.codomain.gens, self.domain.gens, "composition shape");
        Self::new_unchecked(&inner.domain, &self.codomain, self.matrix.mul(&inner.matrix))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new_unchecked(&self.domain, &self.codomain, self.matrix.add(&other.matrix))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new_unchecked(&self.domain, &self.codomain, self.matrix.sub(&other.matrix))
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        Self::new_unchecked(&self.domain, &self.codomain, self.matrix.scale(c))
    }

    /// First domain generator whose image is nonzero.
    pub fn nonzero_witness(&self) -> Option<usize> {
        (0..self.domain.gens).find(|&j| !self.codomain.is_zero_element(&self.matrix.column(j)))
    }

    pub fn is_zero(&self) -> bool {
        self.nonzero_witness().is_none()
    }

    /// First domain generator on which the two maps differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.sub(other).nonzero_witness()
    }

    pub fn equals(&self, other: &Self) -> bool {
        self.first_difference(other).is_none()
    }

    /// Kernel with ambient embedding into the domain.
    pub fn kernel(&self) -> PresentedModule<R> {
        let r = self.ring();
        let pre = Preimage::new(self);
        let raw = pre.kernel_vectors();
        let reduced: Vec<Vec<R::Elem>> = (0..raw.rows()).map(|i| self.domain.residue(raw.row(i))).collect();
        let s = Span::new(&Matrix::from_rows(r, self.domain.gens, reduced));
        let s = s.basis();
        let t = s.rows();
        let rel = crate::linalg::left_kernel(&s.vstack(self.domain.relations()));
        let rel = rel.submatrix(0..rel.rows(), 0..t);
        PresentedModule::new(r, t, &rel).with_ambient_unchecked(self.domain.without_ambient(), s.transpose())
    }

    /// Cokernel and the projection onto it.
    pub fn cokernel(&self) -> (PresentedModule<R>, ModuleMap<R>) {
        let rels = self.codomain.relations().vstack(&self.matrix.transpose());
        let c = PresentedModule::new(self.ring(), self.codomain.gens, &rels);
        let p = ModuleMap::new_unchecked(&self.codomain, &c, Matrix::identity(self.ring(), self.codomain.gens));
        (c, p)
    }

    pub fn is_injective(&self) -> bool {
        let raw = Preimage::new(self).kernel_vectors();
        (0..raw.rows()).all(|i| self.domain.is_zero_element(raw.row(i)))
    }

    pub fn is_surjective(&self) -> bool {
        let pre = Preimage::new(self);
        (0..self.codomain.gens).all(|j| pre.solve(&self.codomain.generator(j)).is_some())
    }

    /// The inverse map when `self` is bijective.
    pub fn inverse(&self) -> Option<ModuleMap<R>> {
        if !self.is_injective() {
            return None;
        }
        let pre = Preimage::new(self);
        let mut cols = Vec::with_capacity(self.codomain.gens);
        for j in 0..self.codomain.gens {
            cols.push(self.domain.residue(&pre.solve(&self.codomain.generator(j))?));
        }
        let m = Matrix::from_rows(self.ring(), self.codomain.gens, cols).transpose();
        let inv = Self::new_unchecked(&self.codomain, &self.domain, m);
        debug_assert!(inv.compose(self).equals(&Self::identity(&self.domain)));
        debug_assert!(self.compose(&inv).equals(&Self::identity(&self.codomain)));
        Some(inv)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// `h` with `through * h = self`, when the image of `self` lies in the image of `through`.
    /// The result is well defined whenever `through` is injective.
    pub fn factor_through(&self, through: &ModuleMap<R>) -> Option<ModuleMap<R>> {
        assert_eq!(self.codomain.gens, through.codomain.gens, "factor_through codomains");
        let pre = Preimage::new(through);
        let mut cols = Vec::with_capacity(self.domain.gens);
        for j in 0..self.domain.gens {
            cols.push(through.domain.residue(&pre.solve(&self.matrix.column(j))?));
        }
        let m = Matrix::from_rows(self.ring(), through.domain.gens, cols).transpose();
        Some(Self::new_unchecked(&self.domain, &through.domain, m))
    }

    /// `self (x) other : A (x) C -> B (x) D`.
    pub fn tensor(&self, other: &Self) -> Self {
        Self::new_unchecked(
            &self.domain.tensor(&other.domain),
            &self.codomain.tensor(&other.codomain),
            self.matrix.kron(&other.matrix),
        )
    }

    /// Same matrix with a different (compatible) domain presentation.
    pub fn with_domain(&self, domain: &PresentedModule<R>) -> Self {
        Self::new_unchecked(domain, &self.codomain, self.matrix.clone())
    }

    pub fn with_codomain(&self, codomain: &PresentedModule<R>) -> Self {
        Self::new_unchecked(&self.domain, codomain, self.matrix.clone())
    }
}

/// Kernel of a map, embedded in its domain.
pub fn kernel_of_map<R: Ring>(f: &ModuleMap<R>) -> PresentedModule<R> {
    f.kernel()
}

pub fn tensor_modules<R: Ring>(m: &PresentedModule<R>, n: &PresentedModule<R>) -> Result<PresentedModule<R>> {
    if m.ring != n.ring {
        return Err(Error::RingMismatch(m.ring.descriptor(), n.ring.descriptor()));
    }
    Ok(m.tensor(n))
}

/// Whether `m` is flat over its ring.
pub fn is_flat<R: Ring>(m: &PresentedModule<R>) -> bool {
    let r = m.ring();
    let st = m.structure();
    match r.descriptor() {
        crate::ring::RingDescriptor::Rationals | crate::ring::RingDescriptor::PrimeField(_) => true,
        crate::ring::RingDescriptor::Integers => st.torsion.is_empty(),
        crate::ring::RingDescriptor::IntegersMod(n) => st.torsion.iter().all(|d| {
            let d: u64 = r.to_integer(d).and_then(|v| v.try_into().ok()).unwrap_or(0);
            d == 0 || num_integer::Integer::gcd(&d, &(n / d)) == 1
        }),
    }
}
