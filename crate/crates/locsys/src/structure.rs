//! Structure theory of one finite-dimensional associative algebra:
//! Jacobson radical, nilpotency, perfect core, Wedderburn–Malcev
//! splitting, simple components with rank certification, characters,
//! codimension-1 ideals, the 1-perfect radical, and rank.
//!
//! The radical is computed as the kernel of the trace form of the left
//! regular representation, which identifies the largest nilpotent ideal
//! exactly when the characteristic is 0 or exceeds the dimension;
//! smaller characteristics are a hard error, never a silent wrong
//! answer. All splitting operations work over the ground field only:
//! components whose minimal polynomials do not factor over ℚ or GF(p)
//! are reported as non-split, never decomposed.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{AlgSubspace, Algebra, Element, Quotient};
use crate::error::Error;
use crate::linear::{
    add_scaled, dense_to_sparse, kernel, scale_sparse, solve_augmented, sparse_to_dense, Mat,
    Reducer, SparseVec, Subspace,
};
use crate::scalar::{FieldSpec, Scalar};
use crate::Result;

/// A Wedderburn–Malcev decomposition: a semisimple subalgebra and the
/// radical, verified to satisfy `levi ∩ radical = 0`,
/// `levi + radical = A`, multiplicative closure of the Levi part, and
/// semisimplicity of its induced presentation.
#[derive(Debug, Clone)]
pub struct LeviSplit {
    pub levi: AlgSubspace,
    pub radical: AlgSubspace,
}

/// Rank of one simple component: `Split(r)` when an `r x r` matrix-unit
/// system was constructed inside it, `NonSplit` otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComponentRank {
    Split(usize),
    NonSplit,
}

/// Decomposition of a semisimple algebra into minimal ideals, listed in
/// a canonical order with their certified ranks.
#[derive(Debug, Clone)]
pub struct ComponentList {
    pub components: Vec<AlgSubspace>,
    pub ranks: Vec<ComponentRank>,
}

/// A nonzero multiplicative linear functional; its kernel is a
/// codimension-1 ideal with unital 1-dimensional quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    functional: Vec<Scalar>,
}

impl Character {
    pub fn functional(&self) -> &[Scalar] {
        &self.functional
    }

    pub fn eval(&self, x: &Element) -> Scalar {
        let mut acc = self.functional[0].field().zero();
        for (f, c) in self.functional.iter().zip(x.coords()) {
            acc = acc.add(&f.mul(c));
        }
        acc
    }

    /// The kernel hyperplane as a verified ideal of `a`.
    pub fn kernel(&self, a: &Algebra) -> Result<AlgSubspace> {
        let row = dense_to_sparse(&self.functional);
        let m = Mat::from_entries(
            1,
            a.dim(),
            a.field(),
            row.into_iter().map(|(c, s)| (0, c, s)).collect(),
        )?;
        let space = kernel(&m);
        let sub = AlgSubspace::new(a, space)?;
        if !a.is_ideal(&sub)? {
            return Err(Error::Postcondition(
                "character kernel is not an ideal".into(),
            ));
        }
        Ok(AlgSubspace::with_flags(
            a.clone(),
            sub.space().clone(),
            Some(true),
            Some(true),
        ))
    }
}

/// Deterministic tie-breaking: candidate lists are taken lowest-index
/// first; a nonzero seed permutes the candidate order (used by the
/// chain-independence checks). Seed 0 is the identity permutation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tiebreak {
    pub seed: u64,
}

impl Tiebreak {
    pub fn new(seed: u64) -> Tiebreak {
        Tiebreak { seed }
    }

    /// Deterministic permutation of a candidate list.
    pub(crate) fn order<T>(&self, mut items: Vec<T>) -> Vec<T> {
        if self.seed == 0 || items.len() < 2 {
            return items;
        }
        // small LCG-driven Fisher-Yates; reproducible across platforms
        let mut state = self.seed.wrapping_mul(6364136223846793005).wrapping_add(1);
        for i in (1..items.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            items.swap(i, j);
        }
        items
    }
}

/// Whether the characteristic admits the trace-form radical.
fn check_radical_window(a: &Algebra) -> Result<()> {
    let p = a.field().characteristic();
    if p != 0 && p <= a.dim() as u64 {
        return Err(Error::CharacteristicTooSmall { p, dim: a.dim() });
    }
    Ok(())
}

/// The Jacobson radical: kernel of the Gram matrix
/// `G[j][k] = Tr(L_{e_j e_k})` of the trace form of the left regular
/// representation. Valid for characteristic 0 or `p > dim`; the result
/// is verified to be a nilpotent ideal before it is returned.
pub fn radical(a: &Algebra) -> Result<AlgSubspace> {
    check_radical_window(a)?;
    let n = a.dim();
    let field = a.field();
    // Tr(L_{e_m}) = sum_i c_{m i}^{i}
    let mut traces = vec![field.zero(); n];
    for (m, i, k, c) in a.structure_constants() {
        if i == k {
            traces[m] = traces[m].add(&c);
        }
    }
    // G[j][k] = sum_m c_{jk}^m * Tr(L_{e_m})
    let mut entries: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
    for (j, k, m, c) in a.structure_constants() {
        if traces[m].is_zero() {
            continue;
        }
        let term = c.mul(&traces[m]);
        entries
            .entry((j, k))
            .and_modify(|s| *s = s.add(&term))
            .or_insert(term);
    }
    let gram = Mat::from_entries(
        n,
        n,
        field,
        entries
            .into_iter()
            .filter(|(_, s)| !s.is_zero())
            .map(|((j, k), s)| (j, k, s))
            .collect(),
    )?;
    let space = kernel(&gram);
    let sub = AlgSubspace::new(a, space)?;
    if !a.is_ideal(&sub)? {
        return Err(Error::Postcondition("radical candidate not an ideal".into()));
    }
    if !subspace_nilpotent(a, sub.space()) {
        return Err(Error::Postcondition("radical candidate not nilpotent".into()));
    }
    Ok(AlgSubspace::with_flags(
        a.clone(),
        sub.space().clone(),
        Some(true),
        Some(true),
    ))
}

/// Descending product chain of an idempotent-free candidate: true iff
/// `s ⊇ s^2 ⊇ ...` reaches zero.
fn subspace_nilpotent(a: &Algebra, s: &Subspace) -> bool {
    let base = AlgSubspace::raw(a.clone(), s.clone());
    let mut cur = base.clone();
    loop {
        if cur.is_zero() {
            return true;
        }
        let next = a
            .subspace_product(&base, &cur)
            .expect("same-algebra product");
        if next.space() == cur.space() {
            return false;
        }
        cur = next;
    }
}

/// True iff the power chain terminates at zero.
pub fn is_nilpotent(a: &Algebra) -> bool {
    a.power_chain().last().map_or(true, AlgSubspace::is_zero)
}

/// The stabilized term of the power chain, a subspace satisfying
/// `core * core = core`.
pub fn perfect_core(a: &Algebra) -> AlgSubspace {
    a.power_chain().into_iter().last().expect("nonempty chain")
}

/// For a finite-dimensional algebra the intersection of all powers is
/// the stabilized term, so residual nilpotency coincides with
/// nilpotency.
pub fn is_residually_nilpotent(a: &Algebra) -> bool {
    perfect_core(a).is_zero()
}

/// True iff `a` is perfect: `a * a = a`.
pub fn is_perfect(a: &Algebra) -> bool {
    let full = AlgSubspace::full(a.clone());
    let sq = a.subspace_product(&full, &full).expect("same algebra");
    sq.space() == full.space()
}

/// The two-sided identity element, if one exists.
pub(crate) fn identity_element(a: &Algebra) -> Result<Option<Element>> {
    let n = a.dim();
    if n == 0 {
        return Ok(None);
    }
    let field = a.field();
    // unknowns x_i; equations: for all j, l: (x e_j)_l = delta_{jl} and
    // (e_j x)_l = delta_{jl}
    let mut rows: BTreeMap<(usize, usize, bool), SparseVec> = BTreeMap::new();
    for (i, j, l, c) in a.structure_constants() {
        rows.entry((j, l, false)).or_default().push((i, c.clone()));
        // right-multiplication equations: (e_i x)_l with generator e_i
        rows.entry((i, l, true)).or_default().push((j, c));
    }
    let mut aug = Vec::new();
    for j in 0..n {
        for l in 0..n {
            for side in [false, true] {
                let mut row = rows.remove(&(j, l, side)).unwrap_or_default();
                row.sort_by_key(|(c, _)| *c);
                // merge duplicate columns
                let mut merged: SparseVec = Vec::new();
                for (c, s) in row {
                    match merged.last_mut() {
                        Some((lc, ls)) if *lc == c => *ls = ls.add(&s),
                        _ => merged.push((c, s)),
                    }
                }
                merged.retain(|(_, s)| !s.is_zero());
                if j == l {
                    merged.push((n, field.one()));
                }
                if !merged.is_empty() {
                    aug.push(merged);
                }
            }
        }
    }
    match solve_augmented(field, aug, n) {
        Some(x) => {
            let e = a.element(x)?;
            // exact verification on the basis
            for i in 0..n {
                let b = a.basis_element(i);
                if e.multiply(&b)? != b || b.multiply(&e)? != b {
                    return Ok(None);
                }
            }
            Ok(Some(e))
        }
        None => Ok(None),
    }
}

/// The center `{x : xy = yx for all y}` as a subspace.
pub fn center(a: &Algebra) -> AlgSubspace {
    let n = a.dim();
    let field = a.field();
    let mut rows: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
    for (i, j, k, c) in a.structure_constants() {
        // (e_g x - x e_g)_k with generator g: +c_{gj}^k x_j - c_{jg}^k x_j
        rows.entry((i, k)).or_default().push((j, c.clone()));
        rows.entry((j, k)).or_default().push((i, c.neg()));
    }
    let mut entries = Vec::new();
    let mut ridx = 0usize;
    for ((_g, _k), row) in rows {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (c, s) in row {
            acc.entry(c).and_modify(|t| *t = t.add(&s)).or_insert(s);
        }
        let mut any = false;
        for (c, s) in acc {
            if !s.is_zero() {
                entries.push((ridx, c, s));
                any = true;
            }
        }
        if any {
            ridx += 1;
        }
    }
    let m = Mat::from_entries(ridx, n, field, entries).expect("well-formed center system");
    AlgSubspace::raw(a.clone(), kernel(&m))
}

// ---------------------------------------------------------------------
// polynomial helpers (coefficientsanscending, over one field)
// ---------------------------------------------------------------------

fn poly_eval(coeffs: &[Scalar], x: &Scalar) -> Scalar {
    let field = x.field();
    let mut acc = field.zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul(x).add(c);
    }
    acc
}

/// Exact synthetic division of `p` by `(T - root)`; `root` must be a
/// root of `p`.
fn poly_div_linear(p: &[Scalar], root: &Scalar) -> Vec<Scalar> {
    let d = p.len() - 1;
    let field = root.field();
    let mut q = vec![field.zero(); d];
    let mut carry = field.zero();
    for k in (1..=d).rev() {
        let qk = p[k].add(&carry);
        q[k - 1] = qk.clone();
        carry = qk.mul(root);
    }
    debug_assert!(p[0].add(&carry).is_zero(), "not a root");
    q
}

/// Evaluates `p(z)` inside the unital context `(span, unit)`: the
/// constant term acts through `unit`.
fn element_poly_eval(a: &Algebra, p: &[Scalar], z: &SparseVec, unit: &SparseVec) -> SparseVec {
    let mut acc: SparseVec = Vec::new();
    for c in p.iter().rev() {
        acc = a.mult_sparse(&acc, z);
        acc = add_scaled(&acc, unit, c);
    }
    acc
}

/// Monic minimal polynomial of `z` in a unital closed context: the
/// power `z^0` is `unit`.
fn min_poly(a: &Algebra, z: &SparseVec, unit: &SparseVec) -> Vec<Scalar> {
    let n = a.dim();
    let field = a.field();
    let mut red = Reducer::new(field);
    let mut power = unit.clone();
    let mut degree = 0usize;
    loop {
        // augmented row [power | e_degree]
        let mut row = power.clone();
        row.push((n + degree, field.one()));
        let rem = red.reduce(row);
        let left_zero = rem.first().map_or(true, |(c, _)| *c >= n);
        if left_zero {
            // tail encodes the dependency sum t_i z^i = 0, monic in z^degree
            let mut coeffs = vec![field.zero(); degree + 1];
            for (c, s) in rem {
                coeffs[c - n] = s;
            }
            let lead = coeffs[degree].clone();
            let inv = lead.inv().expect("monic leading term");
            return coeffs.iter().map(|c| c.mul(&inv)).collect();
        }
        let mut row = power.clone();
        row.push((n + degree, field.one()));
        red.absorb(row);
        power = a.mult_sparse(&power, z);
        degree += 1;
        assert!(degree <= n + 1, "minimal polynomial search exceeded bound");
    }
}

// ---------------------------------------------------------------------
// root finding over the ground field
// ---------------------------------------------------------------------

/// Distinct verified roots in the ground field, sorted ascending.
///
/// Over GF(p) all elements are tried (for p within a practical bound);
/// over ℚ the rational-root candidates run over bounded divisor sets of
/// the cleared numerator and leading coefficient. Failure to find roots
/// of an unfactorable polynomial is reported by the callers as
/// "non-split", never as a wrong decomposition.
fn poly_roots(field: FieldSpec, p: &[Scalar]) -> Vec<Scalar> {
    match field {
        FieldSpec::PrimeField(q) if q <= 1 << 16 => {
            let mut roots = Vec::new();
            for v in 0..q {
                let x = Scalar::Mod { value: v, p: q };
                if poly_eval(p, &x).is_zero() {
                    roots.push(x);
                }
            }
            roots
        }
        FieldSpec::PrimeField(_) => Vec::new(),
        FieldSpec::Rationals => rational_roots(p),
    }
}

fn rational_roots(p: &[Scalar]) -> Vec<Scalar> {
    let rats: Vec<BigRational> = p
        .iter()
        .map(|s| s.as_rational().expect("rational coefficients").clone())
        .collect();
    // strip zero roots
    let mut poly = rats;
    let mut roots: Vec<BigRational> = Vec::new();
    while poly.first().map_or(false, |c| c.is_zero()) && poly.len() > 1 {
        if roots.is_empty() {
            roots.push(BigRational::zero());
        }
        poly.remove(0);
    }
    if poly.len() < 2 {
        roots.sort();
        return roots.into_iter().map(Scalar::Rational).collect();
    }
    // clear denominators to an integer polynomial
    let mut denom_lcm = BigInt::one();
    for c in &poly {
        denom_lcm = num_integer::lcm(denom_lcm, c.denom().clone());
    }
    let ints: Vec<BigInt> = poly
        .iter()
        .map(|c| (c * BigRational::from(denom_lcm.clone())).to_integer())
        .collect();
    let a0 = ints.first().unwrap().abs();
    let an = ints.last().unwrap().abs();
    let nums = bounded_divisors(&a0);
    let dens = bounded_divisors(&an);
    let mut seen = std::collections::BTreeSet::new();
    for num in &nums {
        for den in &dens {
            for sign in [1i64, -1] {
                let cand = BigRational::new(num * BigInt::from(sign), den.clone());
                if !seen.insert(cand.clone()) {
                    continue;
                }
                let c = Scalar::Rational(cand.clone());
                if poly_eval(p, &c).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots.into_iter().map(Scalar::Rational).collect()
}

/// All positive divisors of `n` obtainable from trial division up to
/// 10^6 (the unfactored cofactor is kept whole). Deterministic and
/// bounded; divisors of very hard composites may be missed, which
/// degrades to a "non-split" report upstream.
fn bounded_divisors(n: &BigInt) -> Vec<BigInt> {
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut rem = n.clone();
    let mut d = BigInt::from(2u32);
    let bound = BigInt::from(1_000_000u64);
    while &d * &d <= rem && d <= bound {
        let mut mult = 0u32;
        while (&rem % &d).is_zero() {
            rem /= &d;
            mult += 1;
        }
        if mult > 0 {
            factors.push((d.clone(), mult));
        }
        d += 1u32;
    }
    if rem > BigInt::one() {
        factors.push((rem, 1));
    }
    let mut divisors = vec![BigInt::one()];
    for (p, m) in factors {
        let mut next = Vec::new();
        for d in &divisors {
            let mut pow = BigInt::one();
            for _ in 0..=m {
                next.push(d * &pow);
                pow *= &p;
                if next.len() > 4096 {
                    break;
                }
            }
        }
        divisors = next;
        if divisors.len() > 4096 {
            divisors.truncate(4096);
        }
    }
    divisors.sort();
    divisors.dedup();
    divisors
}

// ---------------------------------------------------------------------
// semisimple decomposition
// ---------------------------------------------------------------------

#[derive(Debug, Clone)]
pub(crate) struct ComponentData {
    /// The minimal ideal as a subspace of the semisimple algebra.
    pub space: Subspace,
    pub rank: ComponentRank,
    /// The central idempotent acting as the component's identity.
    pub idempotent: SparseVec,
}

struct Block {
    unit: SparseVec,
    space: Subspace,
}

/// Decomposes a semisimple algebra into minimal ideals via central
/// primitive idempotents, certifying per-component ranks by explicit
/// matrix-unit construction. Caller must have checked `radical = 0`.
pub(crate) fn decompose_semisimple(a: &Algebra) -> Result<Vec<ComponentData>> {
    if a.dim() == 0 {
        return Ok(Vec::new());
    }
    let field = a.field();
    let one = identity_element(a)?
        .ok_or_else(|| Error::Postcondition("semisimple algebra has no identity".into()))?;
    let one_sp = dense_to_sparse(one.coords());
    let z = center(a);
    let mut work = vec![Block {
        unit: one_sp,
        space: z.space().clone(),
    }];
    let mut final_blocks: Vec<(Block, bool)> = Vec::new();
    while let Some(blk) = work.pop() {
        if blk.space.dim() <= 1 {
            final_blocks.push((blk, true));
            continue;
        }
        let mut split = false;
        let candidates: Vec<SparseVec> = blk.space.sparse_rows().to_vec();
        for zc in &candidates {
            let mu = min_poly(a, zc, &blk.unit);
            if mu.len() <= 2 {
                continue; // scalar multiple of the unit
            }
            let roots = poly_roots(field, &mu);
            if roots.is_empty() {
                continue;
            }
            let mut idems: Vec<SparseVec> = Vec::new();
            let mut residual = blk.unit.clone();
            for root in &roots {
                let h = poly_div_linear(&mu, root);
                let hv = poly_eval(&h, root);
                let Some(inv) = hv.inv() else { continue };
                let e = scale_sparse(&element_poly_eval(a, &h, zc, &blk.unit), &inv);
                if e.is_empty() {
                    continue;
                }
                residual = add_scaled(&residual, &e, &field.one().neg());
                idems.push(e);
            }
            if !residual.is_empty() {
                idems.push(residual);
            }
            if idems.len() < 2 {
                continue;
            }
            for e in idems {
                let rows: Vec<SparseVec> = blk
                    .space
                    .sparse_rows()
                    .iter()
                    .map(|b| a.mult_sparse(&e, b))
                    .collect();
                let space = Subspace::from_sparse_rows(a.dim(), field, rows);
                if space.dim() > 0 {
                    work.push(Block { unit: e, space });
                }
            }
            split = true;
            break;
        }
        if !split {
            final_blocks.push((blk, false));
        }
    }
    let mut out = Vec::new();
    for (blk, center_split) in final_blocks {
        // component ideal: unit * A
        let rows: Vec<SparseVec> = (0..a.dim())
            .map(|i| a.mult_sparse(&blk.unit, &vec![(i, field.one())]))
            .collect();
        let space = Subspace::from_sparse_rows(a.dim(), field, rows);
        let rank = if center_split {
            certify_rank(a, &space, &blk.unit)?
        } else {
            ComponentRank::NonSplit
        };
        out.push(ComponentData {
            space,
            rank,
            idempotent: blk.unit,
        });
    }
    out.sort_by(|x, y| x.space.cmp_canonical(&y.space));
    Ok(out)
}

/// Tries to build an `r x r` matrix-unit system inside a component with
/// 1-dimensional center. The left regular representation on a minimal
/// left ideal is inverted exactly; success certifies the rank.
fn certify_rank(a: &Algebra, comp: &Subspace, unit: &SparseVec) -> Result<ComponentRank> {
    let field = a.field();
    let sub = a.sub_presentation(comp)?;
    let b = &sub.algebra;
    let d = b.dim();
    let r = (1..=d).find(|r| r * r == d);
    let Some(r) = r else {
        return Ok(ComponentRank::NonSplit);
    };
    if r == 1 {
        return Ok(ComponentRank::Split(1));
    }
    // unit in sub coordinates
    let unit_dense = sparse_to_dense(a.dim(), unit, field);
    let Some(unit_b) = comp.coords_in_basis(&unit_dense)? else {
        return Err(Error::Postcondition("component unit outside component".into()));
    };
    let unit_b = dense_to_sparse(&unit_b);
    let Some(e1) = primitive_idempotent(b, &unit_b) else {
        return Ok(ComponentRank::NonSplit);
    };
    // minimal left ideal V = B e1
    let v_rows: Vec<SparseVec> = (0..d)
        .map(|i| b.mult_sparse(&vec![(i, field.one())], &e1))
        .collect();
    let v = Subspace::from_sparse_rows(d, field, v_rows);
    if v.dim() != r {
        return Ok(ComponentRank::NonSplit);
    }
    // rho: B -> End(V), column i = vec(matrix of left mult by e_i)
    let mut phi_entries = Vec::new();
    let v_basis = v.sparse_rows().to_vec();
    for i in 0..d {
        let ei = vec![(i, field.one())];
        for (t, w) in v_basis.iter().enumerate() {
            let img = b.mult_sparse(&ei, w);
            let dense = sparse_to_dense(d, &img, field);
            let Some(coords) = v.coords_in_basis(&dense)? else {
                return Err(Error::Postcondition("left ideal not invariant".into()));
            };
            for (k, val) in coords.into_iter().enumerate() {
                if !val.is_zero() {
                    // matrix entry (k, t) of rho(e_i)
                    phi_entries.push((k * r + t, i, val));
                }
            }
        }
    }
    let phi = Mat::from_entries(d, d, field, phi_entries)?;
    let Some(phi_inv) = crate::linear::inverse(&phi) else {
        return Ok(ComponentRank::NonSplit);
    };
    // matrix units: e_{kl} = phi^{-1} applied to vec(E_{kl})
    let units: Vec<SparseVec> = (0..d)
        .map(|col| {
            (0..d)
                .filter_map(|row| {
                    let s = phi_inv.get(row, col);
                    (!s.is_zero()).then_some((row, s))
                })
                .collect()
        })
        .collect();
    // spot verification: e_{k1} e_{1l} = e_{kl} and the diagonal sums to
    // the unit (injectivity of rho makes the full relation set follow)
    let mut diag_sum: SparseVec = Vec::new();
    for k in 0..r {
        diag_sum = add_scaled(&diag_sum, &units[k * r + k], &field.one());
        for l in 0..r {
            let prod = b.mult_sparse(&units[k * r], &units[l]);
            if prod != units[k * r + l] {
                return Ok(ComponentRank::NonSplit);
            }
        }
    }
    if diag_sum != unit_b {
        return Ok(ComponentRank::NonSplit);
    }
    Ok(ComponentRank::Split(r))
}

/// Peels a unit idempotent down to a primitive one by splitting minimal
/// polynomials of corner elements, lowest candidate and smallest root
/// first.
fn primitive_idempotent(b: &Algebra, unit: &SparseVec) -> Option<SparseVec> {
    let field = b.field();
    let d = b.dim();
    let mut e = unit.clone();
    loop {
        let corner_rows: Vec<SparseVec> = (0..d)
            .map(|i| {
                let ei = vec![(i, field.one())];
                b.mult_sparse(&e, &b.mult_sparse(&ei, &e))
            })
            .collect();
        let corner = Subspace::from_sparse_rows(d, field, corner_rows);
        if corner.dim() <= 1 {
            return Some(e);
        }
        let mut refined = false;
        for zc in corner.sparse_rows() {
            let mu = min_poly(b, zc, &e);
            if mu.len() <= 2 {
                continue;
            }
            let roots = poly_roots(field, &mu);
            let Some(root) = roots.first() else { continue };
            let h = poly_div_linear(&mu, root);
            let Some(inv) = poly_eval(&h, root).inv() else {
                continue;
            };
            let cand = scale_sparse(&element_poly_eval(b, &h, zc, &e), &inv);
            if cand.is_empty() || cand == e {
                continue;
            }
            if b.mult_sparse(&cand, &cand) != cand {
                continue;
            }
            e = cand;
            refined = true;
            break;
        }
        if !refined {
            return None;
        }
    }
}

/// Decomposition of a semisimple algebra into minimal ideals.
pub fn simple_components(a: &Algebra) -> Result<ComponentList> {
    let rad = radical(a)?;
    if !rad.is_zero() {
        return Err(Error::NotSemisimple(rad.dim()));
    }
    let data = decompose_semisimple(a)?;
    let mut components = Vec::new();
    let mut ranks = Vec::new();
    for c in data {
        let sub = AlgSubspace::with_flags(a.clone(), c.space, Some(true), Some(true));
        if !a.is_ideal(&sub)? {
            return Err(Error::Postcondition("component is not an ideal".into()));
        }
        components.push(sub);
        ranks.push(c.rank);
    }
    Ok(ComponentList { components, ranks })
}

/// Everything the split-dependent operations share: the radical, the
/// semisimple quotient with its projection, and that quotient's
/// component data.
pub(crate) struct SplitView {
    pub rad: AlgSubspace,
    pub quotient: Quotient,
    pub comps: Vec<ComponentData>,
}

pub(crate) fn split_view(a: &Algebra) -> Result<SplitView> {
    let rad = radical(a)?;
    let quotient = a.quotient(&rad)?;
    let comps = decompose_semisimple(&quotient.algebra)?;
    Ok(SplitView {
        rad,
        quotient,
        comps,
    })
}

/// Wedderburn–Malcev decomposition: a complement of the radical chosen
/// from its non-pivot coordinates is corrected multiplicatively modulo
/// successive radical powers by solving exact linear systems for each
/// round's defect; at most nilpotency-index rounds.
pub fn wedderburn_malcev(a: &Algebra) -> Result<LeviSplit> {
    let rad = radical(a)?;
    let n = a.dim();
    let field = a.field();
    if rad.dim() == 0 {
        return Ok(LeviSplit {
            levi: AlgSubspace::full(a.clone()),
            radical: rad,
        });
    }
    if rad.dim() == n {
        return Ok(LeviSplit {
            levi: AlgSubspace::zero(a.clone()),
            radical: rad,
        });
    }
    let qt = a.quotient(&rad)?;
    let comps = decompose_semisimple(&qt.algebra)?;
    if let Some(pos) = comps
        .iter()
        .position(|c| matches!(c.rank, ComponentRank::NonSplit))
    {
        return Err(Error::NonSplit(format!(
            "semisimple quotient component {}",
            pos + 1
        )));
    }
    let comp_coords = rad.space().complement_coords();
    let m = comp_coords.len();
    let mut lift: Vec<SparseVec> = comp_coords
        .iter()
        .map(|c| vec![(*c, field.one())])
        .collect();
    // radical power chain R^1 ⊃ R^2 ⊃ ... ⊃ 0
    let mut powers = vec![rad.space().clone()];
    loop {
        let last = powers.last().unwrap();
        if last.is_zero() {
            break;
        }
        let next = a
            .subspace_product(&rad, &AlgSubspace::raw(a.clone(), last.clone()))?
            .space()
            .clone();
        powers.push(next);
    }
    for k in 0..powers.len() - 1 {
        let rk = &powers[k];
        let rk1 = &powers[k + 1];
        let w = rk.dim();
        if w == 0 {
            break;
        }
        let unknowns = m * w;
        let wrows = rk.sparse_rows().to_vec();
        // reduced action of the current complement on the layer
        let mut left = vec![vec![Vec::new(); w]; m];
        let mut right = vec![vec![Vec::new(); w]; m];
        let mut wred = vec![Vec::new(); w];
        for (bi, wb) in wrows.iter().enumerate() {
            wred[bi] = rk1.reduce_sparse(wb.clone());
            for (r, vr) in lift.iter().enumerate() {
                left[r][bi] = rk1.reduce_sparse(a.mult_sparse(vr, wb));
                right[r][bi] = rk1.reduce_sparse(a.mult_sparse(wb, vr));
            }
        }
        let mut rows: Vec<SparseVec> = Vec::new();
        for r in 0..m {
            for s in 0..m {
                // defect d = v_r v_s - sum_t c_{rs}^t v_t, reduced
                let mut d = a.mult_sparse(&lift[r], &lift[s]);
                for (t, c) in qt.algebra.basis_product(r, s) {
                    d = add_scaled(&d, &lift[*t], &c.neg());
                }
                let d = rk1.reduce_sparse(d);
                // per ambient coordinate, a scalar equation over the unknowns
                let mut per_coord: BTreeMap<usize, SparseVec> = BTreeMap::new();
                let mut push = |vec: &SparseVec, col: usize, scale: Option<&Scalar>| {
                    for (coord, s) in vec {
                        let val = match scale {
                            Some(c) => c.mul(s),
                            None => s.clone(),
                        };
                        if !val.is_zero() {
                            per_coord.entry(*coord).or_default().push((col, val));
                        }
                    }
                };
                for bi in 0..w {
                    push(&left[r][bi], s * w + bi, None);
                    push(&right[s][bi], r * w + bi, None);
                    for (t, c) in qt.algebra.basis_product(r, s) {
                        push(&wred[bi], *t * w + bi, Some(&c.neg()));
                    }
                }
                for (coord, s) in &d {
                    per_coord
                        .entry(*coord)
                        .or_default()
                        .push((unknowns, s.neg()));
                }
                for (_, mut row) in per_coord {
                    row.sort_by_key(|(c, _)| *c);
                    let mut merged: SparseVec = Vec::new();
                    for (c, s) in row {
                        match merged.last_mut() {
                            Some((lc, ls)) if *lc == c => *ls = ls.add(&s),
                            _ => merged.push((c, s)),
                        }
                    }
                    merged.retain(|(_, s)| !s.is_zero());
                    if !merged.is_empty() {
                        rows.push(merged);
                    }
                }
            }
        }
        let sol = solve_augmented(field, rows, unknowns).ok_or_else(|| {
            Error::Postcondition("multiplicative defect system is inconsistent".into())
        })?;
        for (j, vj) in lift.iter_mut().enumerate() {
            for (bi, wb) in wrows.iter().enumerate() {
                let c = &sol[j * w + bi];
                if !c.is_zero() {
                    *vj = add_scaled(vj, wb, c);
                }
            }
        }
    }
    // exact defect check
    for r in 0..m {
        for s in 0..m {
            let mut d = a.mult_sparse(&lift[r], &lift[s]);
            for (t, c) in qt.algebra.basis_product(r, s) {
                d = add_scaled(&d, &lift[*t], &c.neg());
            }
            if !d.is_empty() {
                return Err(Error::Postcondition(
                    "Levi complement is not multiplicative".into(),
                ));
            }
        }
    }
    let levi_space = Subspace::from_sparse_rows(n, field, lift);
    if levi_space.dim() != m
        || !levi_space.intersect(rad.space())?.is_zero()
        || levi_space.sum(rad.space())?.dim() != n
    {
        return Err(Error::Postcondition("Levi complement is degenerate".into()));
    }
    // the induced presentation must be semisimple
    let sub = a.sub_presentation(&levi_space)?;
    if !radical(&sub.algebra)?.is_zero() {
        return Err(Error::Postcondition("Levi part has nonzero radical".into()));
    }
    Ok(LeviSplit {
        levi: AlgSubspace::with_flags(a.clone(), levi_space, None, Some(true)),
        radical: rad,
    })
}

/// Minimum of the component ranks of `a / rad a`; defined for perfect
/// algebras with split components.
pub fn algebra_rank(a: &Algebra) -> Result<usize> {
    let core = perfect_core(a);
    if core.dim() != a.dim() {
        return Err(Error::NotPerfect(core.dim(), a.dim()));
    }
    let view = split_view(a)?;
    if view.comps.is_empty() {
        return Err(Error::Shape("rank of the zero algebra is undefined".into()));
    }
    let mut best: Option<usize> = None;
    for (i, c) in view.comps.iter().enumerate() {
        match c.rank {
            ComponentRank::Split(r) => best = Some(best.map_or(r, |b| b.min(r))),
            ComponentRank::NonSplit => {
                return Err(Error::NonSplit(format!("component {}", i + 1)))
            }
        }
    }
    Ok(best.unwrap())
}

/// One character per 1-dimensional simple component of `a / rad a`,
/// pulled back along the projection and verified multiplicative on all
/// basis pairs.
pub fn characters(a: &Algebra) -> Result<Vec<Character>> {
    let view = split_view(a)?;
    let qalg = &view.quotient.algebra;
    let mut out = Vec::new();
    for c in &view.comps {
        if c.space.dim() != 1 {
            continue;
        }
        // the idempotent spans the component; the functional reads the
        // coefficient of the idempotent in eps * x
        let (anchor, anchor_val) = c.idempotent[0].clone();
        let inv = anchor_val.inv().expect("idempotent is nonzero");
        let mut functional = vec![a.field().zero(); qalg.dim()];
        for (i, f) in functional.iter_mut().enumerate() {
            let prod = qalg.mult_sparse(&c.idempotent, &vec![(i, a.field().one())]);
            if let Some((_, v)) = prod.iter().find(|(cc, _)| *cc == anchor) {
                *f = v.mul(&inv);
            }
        }
        // pull back: f(e_j) = functional(pi(e_j))
        let mut pulled = vec![a.field().zero(); a.dim()];
        for (j, pf) in pulled.iter_mut().enumerate() {
            let col: Vec<Scalar> = (0..qalg.dim())
                .map(|r| view.quotient.projection.get(r, j))
                .collect();
            let mut acc = a.field().zero();
            for (fv, cv) in functional.iter().zip(&col) {
                acc = acc.add(&fv.mul(cv));
            }
            *pf = acc;
        }
        let ch = Character { functional: pulled };
        verify_character(a, &ch)?;
        out.push(ch);
    }
    Ok(out)
}

fn verify_character(a: &Algebra, ch: &Character) -> Result<()> {
    if ch.functional.iter().all(Scalar::is_zero) {
        return Err(Error::Postcondition("character is zero".into()));
    }
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let x = a.basis_element(i);
            let y = a.basis_element(j);
            let lhs = ch.eval(&x.multiply(&y)?);
            let rhs = ch.eval(&x).mul(&ch.eval(&y));
            if lhs != rhs {
                return Err(Error::Postcondition(
                    "character is not multiplicative".into(),
                ));
            }
        }
    }
    Ok(())
}

/// A codimension-1 ideal when one exists: a hyperplane above `a^2` when
/// `a` is not perfect, the kernel of the first character otherwise;
/// `None` certifies 1-perfection.
pub fn find_codim1_ideal(a: &Algebra) -> Result<Option<AlgSubspace>> {
    find_codim1_ideal_seeded(a, Tiebreak::default())
}

pub fn find_codim1_ideal_seeded(a: &Algebra, tb: Tiebreak) -> Result<Option<AlgSubspace>> {
    let full = AlgSubspace::full(a.clone());
    let sq = a.subspace_product(&full, &full)?;
    if sq.dim() != a.dim() {
        // any hyperplane containing a^2 is an ideal; drop one free
        // coordinate of a^2, lowest index first under the tie-break
        let free = tb.order(sq.space().complement_coords());
        let dropped = free[0];
        let mut rows = sq.space().sparse_rows().to_vec();
        for c in &free[1..] {
            rows.push(vec![(*c, a.field().one())]);
        }
        let space = Subspace::from_sparse_rows(a.dim(), a.field(), rows);
        let sub = AlgSubspace::new(a, space)?;
        debug_assert!(!sub.space().contains(&{
            let mut v = vec![a.field().zero(); a.dim()];
            v[dropped] = a.field().one();
            v
        })?);
        if !a.is_ideal(&sub)? {
            return Err(Error::Postcondition("hyperplane is not an ideal".into()));
        }
        return Ok(Some(AlgSubspace::with_flags(
            a.clone(),
            sub.space().clone(),
            Some(true),
            Some(true),
        )));
    }
    let chars = tb.order(characters(a)?);
    match chars.first() {
        Some(ch) => Ok(Some(ch.kernel(a)?)),
        None => Ok(None),
    }
}

/// True iff `a` has no ideal of codimension 1.
pub fn is_one_perfect(a: &Algebra) -> Result<bool> {
    Ok(find_codim1_ideal(a)?.is_none())
}

/// The 1-perfect radical: the terminal subspace of a maximal chain of
/// codimension-1 ideal steps, expressed in the original coordinates.
/// The result is verified idempotent and an ideal of `a`; any maximal
/// chain reaches the same subspace, which the seeded variant exercises.
pub fn one_perfect_radical(a: &Algebra) -> Result<AlgSubspace> {
    one_perfect_radical_seeded(a, Tiebreak::default())
}

pub fn one_perfect_radical_seeded(a: &Algebra, tb: Tiebreak) -> Result<AlgSubspace> {
    let chain = one_perfect_chain(a, tb)?;
    let space = chain.last().expect("chain contains the algebra").clone();
    let sub = AlgSubspace::new(a, space)?;
    if !a.is_ideal(&sub)? {
        return Err(Error::Postcondition("1-perfect radical is not an ideal".into()));
    }
    let sq = a.subspace_product(&sub, &sub)?;
    if sq.space() != sub.space() {
        return Err(Error::Postcondition("1-perfect radical is not idempotent".into()));
    }
    Ok(AlgSubspace::with_flags(
        a.clone(),
        sub.space().clone(),
        Some(true),
        Some(true),
    ))
}

/// The full descent chain `A ⊃ A_1 ⊃ ... ⊃ P`, as subspaces of `a`'s
/// coordinates (the first entry is the full space).
pub fn one_perfect_chain(a: &Algebra, tb: Tiebreak) -> Result<Vec<Subspace>> {
    let mut chain = vec![Subspace::full(a.dim(), a.field())];
    let mut current = a.clone();
    // inclusion of the current stage back into a's coordinates
    let mut incl = Mat::identity(a.dim(), a.field());
    loop {
        match find_codim1_ideal_seeded(&current, tb)? {
            None => return Ok(chain),
            Some(h) => {
                let sub = current.sub_presentation(h.space())?;
                incl = incl.mul(&sub.inclusion)?;
                current = sub.algebra;
                chain.push(Subspace::col_space(&incl));
            }
        }
    }
}

/// One maximal ideal per simple component of `a / rad a`: the preimage
/// of the sum of all other components. Requires a perfect input; each
/// returned ideal is verified maximal by checking its quotient simple.
pub fn maximal_ideals(a: &Algebra) -> Result<Vec<AlgSubspace>> {
    let core = perfect_core(a);
    if core.dim() != a.dim() {
        return Err(Error::NotPerfect(core.dim(), a.dim()));
    }
    let view = split_view(a)?;
    let lift_coords = view.rad.space().complement_coords();
    let mut out = Vec::new();
    for (t, _) in view.comps.iter().enumerate() {
        let mut rows = view.rad.space().sparse_rows().to_vec();
        for (s, other) in view.comps.iter().enumerate() {
            if s == t {
                continue;
            }
            for row in other.space.sparse_rows() {
                // section: place quotient coordinates on complement coords
                let lifted: SparseVec = row
                    .iter()
                    .map(|(c, v)| (lift_coords[*c], v.clone()))
                    .collect();
                rows.push(lifted);
            }
        }
        let space = Subspace::from_sparse_rows(a.dim(), a.field(), rows);
        let sub = AlgSubspace::new(a, space)?;
        if !a.is_ideal(&sub)? {
            return Err(Error::Postcondition("maximal ideal candidate not an ideal".into()));
        }
        let verified = AlgSubspace::with_flags(
            a.clone(),
            sub.space().clone(),
            Some(true),
            Some(true),
        );
        let qt = a.quotient(&verified)?;
        if !is_simple(&qt.algebra)? {
            return Err(Error::Postcondition("quotient by maximal ideal not simple".into()));
        }
        out.push(verified);
    }
    Ok(out)
}

/// True iff the radical vanishes, the square is nonzero, and there is
/// exactly one simple component.
pub fn is_simple(a: &Algebra) -> Result<bool> {
    if a.dim() == 0 {
        return Ok(false);
    }
    let rad = radical(a)?;
    if !rad.is_zero() {
        return Ok(false);
    }
    let full = AlgSubspace::full(a.clone());
    if a.subspace_product(&full, &full)?.is_zero() {
        return Ok(false);
    }
    let comps = decompose_semisimple(a)?;
    Ok(comps.len() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn unit(n: usize, i: usize, j: usize) -> usize {
        (i - 1) * n + (j - 1)
    }

    #[test]
    fn radical_of_simple_is_zero() {
        let m2 = Algebra::matrix_algebra(2, q());
        assert!(radical(&m2).unwrap().is_zero());
    }

    #[test]
    fn radical_of_t2_is_the_nilpotent_line() {
        // Gram matrix on (e11, e12, e22) is diag(2, 0, 1) up to the
        // off-diagonal zeros, worked by hand; kernel is the e12 line.
        let t2 = Algebra::upper_triangular(2, q());
        let rad = radical(&t2).unwrap();
        assert_eq!(rad, AlgSubspace::from_coords(&t2, &[1]));
        assert_eq!(rad.ideal_flag(), Some(true));
    }

    #[test]
    fn radical_of_null_algebra_is_everything() {
        let null = Algebra::null_algebra(q());
        assert_eq!(radical(&null).unwrap().dim(), 1);
    }

    #[test]
    fn radical_rejects_small_characteristic() {
        let f5 = FieldSpec::new(5).unwrap();
        let t3 = Algebra::upper_triangular(3, f5); // dim 6 > 5
        match radical(&t3) {
            Err(Error::CharacteristicTooSmall { p, dim }) => {
                assert_eq!((p, dim), (5, 6));
            }
            other => panic!("expected characteristic error, got {other:?}"),
        }
    }

    #[test]
    fn radical_works_in_large_enough_characteristic() {
        let f7 = FieldSpec::new(7).unwrap();
        let t3 = Algebra::upper_triangular(3, f7); // dim 6 < 7
        assert_eq!(radical(&t3).unwrap().dim(), 3);
    }

    #[test]
    fn nilpotency_examples() {
        assert!(is_nilpotent(&Algebra::strictly_upper(3, q())));
        assert!(!is_nilpotent(&Algebra::matrix_algebra(2, q())));
        // T_2 squared is T_2 via its idempotents
        assert!(!is_nilpotent(&Algebra::upper_triangular(2, q())));
    }

    #[test]
    fn perfect_core_examples() {
        let m3 = Algebra::matrix_algebra(3, q());
        assert_eq!(perfect_core(&m3).dim(), 9);

        assert!(perfect_core(&Algebra::strictly_upper(3, q())).is_zero());

        // T_2 ⊕ null: the core is the T_2 block
        let t2 = Algebra::upper_triangular(2, q());
        let sum = t2.direct_sum(&Algebra::null_algebra(q())).unwrap();
        let core = perfect_core(&sum);
        assert_eq!(core, AlgSubspace::from_coords(&sum, &[0, 1, 2]));
    }

    #[test]
    fn residual_nilpotency_collapses_to_nilpotency() {
        for a in [
            Algebra::matrix_algebra(2, q()),
            Algebra::upper_triangular(2, q()),
            Algebra::upper_triangular(3, q()),
            Algebra::strictly_upper(3, q()),
            Algebra::strictly_upper(4, q()),
            Algebra::null_algebra(q()),
            Algebra::zero_algebra(q()),
        ] {
            assert_eq!(is_residually_nilpotent(&a), is_nilpotent(&a));
        }
        assert!(is_residually_nilpotent(&Algebra::strictly_upper(3, q())));
        assert!(!is_residually_nilpotent(&Algebra::matrix_algebra(2, q())));
        assert!(!is_residually_nilpotent(&Algebra::upper_triangular(2, q())));
    }

    #[test]
    fn identity_and_center_of_matrix_algebra() {
        let m3 = Algebra::matrix_algebra(3, q());
        let one = identity_element(&m3).unwrap().unwrap();
        for i in 0..9 {
            let b = m3.basis_element(i);
            assert_eq!(one.multiply(&b).unwrap(), b);
            assert_eq!(b.multiply(&one).unwrap(), b);
        }
        assert_eq!(center(&m3).dim(), 1);
        // no identity in a nilpotent algebra
        assert!(identity_element(&Algebra::strictly_upper(3, q()))
            .unwrap()
            .is_none());
    }

    #[test]
    fn wedderburn_malcev_on_simple_and_nilpotent() {
        let m2 = Algebra::matrix_algebra(2, q());
        let split = wedderburn_malcev(&m2).unwrap();
        assert_eq!(split.levi.dim(), 4);
        assert!(split.radical.is_zero());

        let null = Algebra::null_algebra(q());
        let split = wedderburn_malcev(&null).unwrap();
        assert!(split.levi.is_zero());
        assert_eq!(split.radical.dim(), 1);
    }

    #[test]
    fn wedderburn_malcev_of_t2_is_the_diagonal() {
        let t2 = Algebra::upper_triangular(2, q());
        let split = wedderburn_malcev(&t2).unwrap();
        assert_eq!(split.levi, AlgSubspace::from_coords(&t2, &[0, 2]));
        assert_eq!(split.radical, AlgSubspace::from_coords(&t2, &[1]));
    }

    fn verify_levi(a: &Algebra, split: &LeviSplit) {
        assert!(split
            .levi
            .space()
            .intersect(split.radical.space())
            .unwrap()
            .is_zero());
        assert_eq!(
            split
                .levi
                .space()
                .sum(split.radical.space())
                .unwrap()
                .dim(),
            a.dim()
        );
        assert!(a.is_subalgebra(&split.levi).unwrap());
        let sub = a.sub_presentation(split.levi.space()).unwrap();
        assert!(radical(&sub.algebra).unwrap().is_zero());
    }

    #[test]
    fn wedderburn_malcev_postconditions_after_basis_mixing() {
        // re-coordinatize T_3 unipotently so the pivot complement of the
        // radical is no longer multiplicative and correction rounds run
        let t3 = Algebra::upper_triangular(3, q());
        let f = q();
        let n = t3.dim();
        let mut rows = vec![vec![f.zero(); n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = f.one();
        }
        // T_3 basis: e11, e12, e13, e22, e23, e33
        rows[1][0] = f.one(); // f_1 = e11 + e12
        rows[2][3] = f.one(); // f_4 = e22 + e13
        let p = Mat::from_rows(f, rows).unwrap().transpose();
        let moved = t3.change_basis(&p).unwrap();
        assert!(moved.check_associativity().passed());
        let split = wedderburn_malcev(&moved).unwrap();
        assert_eq!(split.radical.dim(), 3);
        assert_eq!(split.levi.dim(), 3);
        verify_levi(&moved, &split);
    }

    #[test]
    fn simple_components_of_m2_plus_m3() {
        let m2 = Algebra::matrix_algebra(2, q());
        let m3 = Algebra::matrix_algebra(3, q());
        let sum = m2.direct_sum(&m3).unwrap();
        let comps = simple_components(&sum).unwrap();
        assert_eq!(comps.components.len(), 2);
        let dims: Vec<usize> = comps.components.iter().map(AlgSubspace::dim).collect();
        assert_eq!(dims, vec![4, 9]);
        assert_eq!(
            comps.ranks,
            vec![ComponentRank::Split(2), ComponentRank::Split(3)]
        );
    }

    #[test]
    fn simple_components_of_commutative_split_case() {
        let m1 = Algebra::matrix_algebra(1, q());
        let sum = m1.direct_sum(&m1).unwrap().direct_sum(&m1).unwrap();
        let comps = simple_components(&sum).unwrap();
        assert_eq!(comps.components.len(), 3);
        assert!(comps
            .ranks
            .iter()
            .all(|r| *r == ComponentRank::Split(1)));
    }

    #[test]
    fn simple_components_of_m4() {
        let m4 = Algebra::matrix_algebra(4, q());
        let comps = simple_components(&m4).unwrap();
        assert_eq!(comps.components.len(), 1);
        assert_eq!(comps.ranks, vec![ComponentRank::Split(4)]);
    }

    #[test]
    fn simple_components_rejects_radical() {
        let t2 = Algebra::upper_triangular(2, q());
        assert!(matches!(
            simple_components(&t2),
            Err(Error::NotSemisimple(1))
        ));
    }

    #[test]
    fn nonsplit_component_is_reported_not_decomposed() {
        // Q[T]/(T^2+1): basis 1, t with t^2 = -1; a field, so semisimple
        // with a 2-dimensional center that has no rational eigenvalues.
        let f = q();
        let a = Algebra::new(
            2,
            f,
            vec![
                (0, 0, 0, f.one()),
                (0, 1, 1, f.one()),
                (1, 0, 1, f.one()),
                (1, 1, 0, f.from_i64(-1)),
            ],
            Some("Q(i)".into()),
        )
        .unwrap();
        assert!(a.check_associativity().passed());
        let comps = simple_components(&a).unwrap();
        assert_eq!(comps.components.len(), 1);
        assert_eq!(comps.ranks, vec![ComponentRank::NonSplit]);
    }

    #[test]
    fn algebra_rank_examples() {
        assert_eq!(algebra_rank(&Algebra::matrix_algebra(3, q())).unwrap(), 3);
        let m2m3 = Algebra::matrix_algebra(2, q())
            .direct_sum(&Algebra::matrix_algebra(3, q()))
            .unwrap();
        assert_eq!(algebra_rank(&m2m3).unwrap(), 2);
        let m5m5 = Algebra::matrix_algebra(5, q())
            .direct_sum(&Algebra::matrix_algebra(5, q()))
            .unwrap();
        assert_eq!(algebra_rank(&m5m5).unwrap(), 5);
        // non-perfect input is rejected
        let u3 = Algebra::strictly_upper(3, q());
        assert!(matches!(algebra_rank(&u3), Err(Error::NotPerfect(0, 3))));
    }

    #[test]
    fn characters_of_t2() {
        let t2 = Algebra::upper_triangular(2, q());
        let chars = characters(&t2).unwrap();
        assert_eq!(chars.len(), 2);
        let f = q();
        // first character sends e11 -> 1 (components in canonical order)
        assert_eq!(chars[0].functional(), &[f.one(), f.zero(), f.zero()]);
        assert_eq!(chars[1].functional(), &[f.zero(), f.zero(), f.one()]);
    }

    #[test]
    fn characters_of_m2_and_the_ground_field() {
        assert!(characters(&Algebra::matrix_algebra(2, q()))
            .unwrap()
            .is_empty());
        let chars = characters(&Algebra::matrix_algebra(1, q())).unwrap();
        assert_eq!(chars.len(), 1);
        assert!(chars[0].functional()[0].is_one());
    }

    #[test]
    fn find_codim1_examples() {
        assert!(find_codim1_ideal(&Algebra::matrix_algebra(2, q()))
            .unwrap()
            .is_none());

        let null = Algebra::null_algebra(q());
        let h = find_codim1_ideal(&null).unwrap().unwrap();
        assert!(h.is_zero());

        let t2 = Algebra::upper_triangular(2, q());
        let h = find_codim1_ideal(&t2).unwrap().unwrap();
        assert_eq!(h, AlgSubspace::from_coords(&t2, &[1, 2])); // e12, e22
    }

    #[test]
    fn one_perfect_radical_examples() {
        for n in 2..=4 {
            let mn = Algebra::matrix_algebra(n, q());
            assert_eq!(one_perfect_radical(&mn).unwrap().dim(), n * n);
        }
        // worked chain: T_2 ⊃ span{e22,e12} ⊃ span{e12} ⊃ 0
        let t2 = Algebra::upper_triangular(2, q());
        let chain = one_perfect_chain(&t2, Tiebreak::default()).unwrap();
        let dims: Vec<usize> = chain.iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![3, 2, 1, 0]);
        assert!(one_perfect_radical(&t2).unwrap().is_zero());

        // F ⊕ M_2: one character kill, then stop at the M_2 block
        let fm2 = Algebra::matrix_algebra(1, q())
            .direct_sum(&Algebra::matrix_algebra(2, q()))
            .unwrap();
        let p = one_perfect_radical(&fm2).unwrap();
        assert_eq!(p, AlgSubspace::from_coords(&fm2, &[1, 2, 3, 4]));
    }

    #[test]
    fn one_perfect_radical_is_seed_independent() {
        let t3 = Algebra::upper_triangular(3, q());
        let fm2 = Algebra::matrix_algebra(1, q())
            .direct_sum(&Algebra::matrix_algebra(2, q()))
            .unwrap();
        for a in [t3, fm2] {
            let base = one_perfect_radical(&a).unwrap();
            for seed in 1..=5 {
                let seeded = one_perfect_radical_seeded(&a, Tiebreak::new(seed)).unwrap();
                assert_eq!(base.space(), seeded.space(), "seed {seed}");
            }
        }
    }

    #[test]
    fn is_one_perfect_examples() {
        assert!(is_one_perfect(&Algebra::matrix_algebra(2, q())).unwrap());
        assert!(!is_one_perfect(&Algebra::upper_triangular(2, q())).unwrap());
        let m2m3 = Algebra::matrix_algebra(2, q())
            .direct_sum(&Algebra::matrix_algebra(3, q()))
            .unwrap();
        assert!(is_one_perfect(&m2m3).unwrap());
    }

    #[test]
    fn one_perfect_radical_properties() {
        // P^2 = P, P of P equals P, P of the quotient is zero
        let fixtures = vec![
            Algebra::upper_triangular(2, q()),
            Algebra::upper_triangular(3, q()),
            Algebra::matrix_algebra(2, q()),
            Algebra::matrix_algebra(1, q())
                .direct_sum(&Algebra::matrix_algebra(2, q()))
                .unwrap(),
            Algebra::strictly_upper(3, q()),
        ];
        for a in fixtures {
            let p = one_perfect_radical(&a).unwrap();
            let sq = a.subspace_product(&p, &p).unwrap();
            assert_eq!(sq.space(), p.space(), "P^2 = P");
            if p.dim() > 0 {
                let sub = a.sub_presentation(p.space()).unwrap();
                let pp = one_perfect_radical(&sub.algebra).unwrap();
                assert_eq!(pp.dim(), p.dim(), "P of P is P");
            }
            let qt = a.quotient(&p).unwrap();
            assert!(
                one_perfect_radical(&qt.algebra).unwrap().is_zero(),
                "P of quotient is zero"
            );
        }
    }

    #[test]
    fn sum_of_one_perfect_ideals_is_one_perfect() {
        // in M_2 ⊕ M_3 ⊕ F, the two matrix blocks are 1-perfect ideals
        let a = Algebra::matrix_algebra(2, q())
            .direct_sum(&Algebra::matrix_algebra(3, q()))
            .unwrap()
            .direct_sum(&Algebra::matrix_algebra(1, q()))
            .unwrap();
        let i = AlgSubspace::from_coords(&a, &(0..4).collect::<Vec<_>>());
        let j = AlgSubspace::from_coords(&a, &(4..13).collect::<Vec<_>>());
        for s in [&i, &j] {
            let sub = a.sub_presentation(s.space()).unwrap();
            assert!(is_one_perfect(&sub.algebra).unwrap());
        }
        let sum = i.space().sum(j.space()).unwrap();
        let sub = a.sub_presentation(&sum).unwrap();
        assert!(is_one_perfect(&sub.algebra).unwrap());
    }

    #[test]
    fn idempotent_ideal_of_ideal_is_ambient_ideal() {
        // A = T_2 ⊕ M_2; P = span{e12} ⊕ M_2 is an ideal of A and the
        // M_2 block is an idempotent ideal of P, hence an ideal of A
        let a = Algebra::upper_triangular(2, q())
            .direct_sum(&Algebra::matrix_algebra(2, q()))
            .unwrap();
        let p = AlgSubspace::from_coords(&a, &[1, 3, 4, 5, 6]);
        assert!(a.is_ideal(&p).unwrap());
        let block = AlgSubspace::from_coords(&a, &[3, 4, 5, 6]);
        let sq = a.subspace_product(&block, &block).unwrap();
        assert_eq!(sq.space(), block.space());
        assert!(a.is_ideal(&block).unwrap());
    }

    #[test]
    fn maximal_ideals_examples() {
        let m2 = Algebra::matrix_algebra(2, q());
        let ms = maximal_ideals(&m2).unwrap();
        assert_eq!(ms.len(), 1);
        assert!(ms[0].is_zero());

        let m2m3 = Algebra::matrix_algebra(2, q())
            .direct_sum(&Algebra::matrix_algebra(3, q()))
            .unwrap();
        let ms = maximal_ideals(&m2m3).unwrap();
        assert_eq!(ms.len(), 2);
        // complements: first the M_3 block, then the M_2 block
        assert_eq!(ms[0], AlgSubspace::from_coords(&m2m3, &(4..13).collect::<Vec<_>>()));
        assert_eq!(ms[1], AlgSubspace::from_coords(&m2m3, &(0..4).collect::<Vec<_>>()));

        // T_2 is perfect, so it is accepted: two character kernels
        let t2 = Algebra::upper_triangular(2, q());
        let ms = maximal_ideals(&t2).unwrap();
        assert_eq!(ms.len(), 2);
        assert_eq!(ms[0], AlgSubspace::from_coords(&t2, &[1, 2]));
        assert_eq!(ms[1], AlgSubspace::from_coords(&t2, &[0, 1]));
    }

    #[test]
    fn is_simple_examples() {
        assert!(is_simple(&Algebra::matrix_algebra(3, q())).unwrap());
        let m2m2 = Algebra::matrix_algebra(2, q())
            .direct_sum(&Algebra::matrix_algebra(2, q()))
            .unwrap();
        assert!(!is_simple(&m2m2).unwrap());
        assert!(!is_simple(&Algebra::upper_triangular(2, q())).unwrap());
        assert!(!is_simple(&Algebra::null_algebra(q())).unwrap());
        assert!(!is_simple(&Algebra::zero_algebra(q())).unwrap());
    }

    #[test]
    fn structure_over_prime_fields() {
        let f = FieldSpec::new(31).unwrap();
        let t3 = Algebra::upper_triangular(3, f);
        assert_eq!(radical(&t3).unwrap().dim(), 3);
        let split = wedderburn_malcev(&t3).unwrap();
        verify_levi(&t3, &split);
        let m2 = Algebra::matrix_algebra(2, f);
        assert_eq!(algebra_rank(&m2).unwrap(), 2);
        let chars = characters(&t3).unwrap();
        assert_eq!(chars.len(), 3);
        assert!(one_perfect_radical(&t3).unwrap().is_zero());
    }

    #[test]
    fn degenerate_zero_dimensional_contract() {
        let z = Algebra::zero_algebra(q());
        assert!(radical(&z).unwrap().is_zero());
        assert!(is_nilpotent(&z));
        assert!(is_residually_nilpotent(&z));
        assert!(simple_components(&z).unwrap().components.is_empty());
        assert!(one_perfect_radical(&z).unwrap().is_zero());
    }
}
