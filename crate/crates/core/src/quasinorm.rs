// SPDX-License-Identifier: Apache-2.0

//! Exact quasi-norm calculus on finite abelian groups.
//!
//! A quasi-norm is a table of values in `[0, ∞]` with `p(0) = 0`, `p(-x) = p(x)` and
//! `p(x+y) <= p(x) + p(y)`. The dual lives on the character group:
//!
//! ```text
//! p#(χ) = max { λ(χ(g)) / p(g) : χ(g) ≠ 1 }      (max over ∅ is 0)
//! ```
//!
//! and the regularisation is the pull-back of `p##` along the evaluation map.
//! On a full group `Z/n1 × … × Z/nk` the character group uses the same index
//! set, so a dual table has the same shape as the table it came from.

use std::fmt;
use std::sync::Arc;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::abelian::{Character, FiniteAbelianGroup, GroupElement, Subgroup};
use crate::duality::{Domain, DomainLabel, Duality};
use crate::error::{Error, Result};
use crate::ext::{ExtValue, Rational};

/// The three quasi-norm axioms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    IdentityVanishes,
    Symmetry,
    Subadditivity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::IdentityVanishes => "p(e_G) = 0",
            Axiom::Symmetry => "p(-x) = p(x)",
            Axiom::Subadditivity => "p(x+y) <= p(x) + p(y)",
        })
    }
}

/// A violated axiom together with the points that witness it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    /// Formatted residue tuples: `[e]`, `[x, -x]` or `[x, y]`.
    pub witness: Vec<String>,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "axiom {} fails at {}", self.axiom, self.witness.join(", "))
    }
}

/// Checks the quasi-norm axioms for a table over `domain`.
pub fn check_axioms(domain: &Domain, values: &[ExtValue]) -> std::result::Result<(), AxiomViolation> {
    let n = domain.len();
    assert_eq!(values.len(), n);
    if !values[0].is_zero() {
        return Err(AxiomViolation {
            axiom: Axiom::IdentityVanishes,
            witness: vec![domain.format_point(0)],
        });
    }
    for i in 0..n {
        let j = domain.neg(i);
        if values[i] != values[j] {
            return Err(AxiomViolation {
                axiom: Axiom::Symmetry,
                witness: vec![domain.format_point(i), domain.format_point(j)],
            });
        }
    }
    for i in 0..n {
        if !values[i].is_finite() {
            continue;
        }
        for j in i..n {
            if values[domain.add(i, j)] > values[i].add(values[j]) {
                return Err(AxiomViolation {
                    axiom: Axiom::Subadditivity,
                    witness: vec![domain.format_point(i), domain.format_point(j)],
                });
            }
        }
    }
    Ok(())
}

/// The group a quasi-norm table is attached to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Carrier {
    Group(FiniteAbelianGroup),
    Subgroup(Subgroup),
}

impl Carrier {
    fn duality(&self) -> Arc<Duality> {
        match self {
            Carrier::Group(g) => g.duality(),
            Carrier::Subgroup(h) => h.duality(),
        }
    }

    /// The ambient product of cyclic groups.
    pub fn ambient(&self) -> &FiniteAbelianGroup {
        match self {
            Carrier::Group(g) => g,
            Carrier::Subgroup(h) => h.ambient(),
        }
    }
}

/// Outcome of a regularity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityReport {
    pub is_regular: bool,
    /// First point where the regularisation differs, when not regular.
    pub witness: Option<RegularityWitness>,
    /// Regular and the canonical evaluation onto the second dual is onto.
    pub is_reflexive: bool,
    /// The evaluation map was counted to be a bijection.
    pub evaluation_bijective: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityWitness {
    pub point: Vec<u64>,
    pub value: ExtValue,
    pub regularised: ExtValue,
}

/// A quasi-norm on a finite group (or on the character group of one).
#[derive(Clone)]
pub struct QuasiNorm {
    carrier: Carrier,
    duality: Arc<Duality>,
    on_dual: bool,
    values: Vec<ExtValue>,
}

impl PartialEq for QuasiNorm {
    fn eq(&self, other: &Self) -> bool {
        self.is_compatible(other) && self.values == other.values
    }
}

impl Eq for QuasiNorm {}

impl fmt::Debug for QuasiNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.domain();
        let mut m = f.debug_map();
        for (i, v) in self.values.iter().enumerate() {
            m.entry(&d.format_point(i), &v.to_string());
        }
        m.finish()
    }
}

impl QuasiNorm {
    /// Validates a full table indexed like [`FiniteAbelianGroup::elements`].
    pub fn from_values(group: &FiniteAbelianGroup, values: Vec<ExtValue>) -> Result<Self> {
        if values.len() != group.order() {
            return Err(Error::input(format!(
                "table has {} entries but the group has {} elements",
                values.len(),
                group.order()
            )));
        }
        Self::checked(Carrier::Group(group.clone()), false, values)
    }

    pub fn from_fn(
        group: &FiniteAbelianGroup,
        mut f: impl FnMut(&GroupElement) -> ExtValue,
    ) -> Result<Self> {
        Self::from_values(group, group.elements().map(|x| f(&x)).collect())
    }

    fn checked(carrier: Carrier, on_dual: bool, values: Vec<ExtValue>) -> Result<Self> {
        let q = Self::unchecked(carrier, on_dual, values);
        check_axioms(q.domain(), &q.values).map_err(Error::Axiom)?;
        Ok(q)
    }

    fn unchecked(carrier: Carrier, on_dual: bool, values: Vec<ExtValue>) -> Self {
        let duality = carrier.duality();
        debug_assert_eq!(values.len(), duality.side(on_dual).len());
        QuasiNorm {
            carrier,
            duality,
            on_dual,
            values,
        }
    }

    fn with_values(&self, on_dual: bool, values: Vec<ExtValue>) -> Self {
        QuasiNorm {
            carrier: self.carrier.clone(),
            duality: self.duality.clone(),
            on_dual,
            values,
        }
    }

    /// `δ_G`: 1 off the identity.
    pub fn discrete(group: &FiniteAbelianGroup) -> Self {
        let mut v = vec![ExtValue::ONE; group.order()];
        v[0] = ExtValue::ZERO;
        Self::unchecked(Carrier::Group(group.clone()), false, v)
    }

    /// The least quasi-norm, identically 0.
    pub fn zero(group: &FiniteAbelianGroup) -> Self {
        Self::unchecked(
            Carrier::Group(group.clone()),
            false,
            vec![ExtValue::ZERO; group.order()],
        )
    }

    /// The greatest quasi-norm, `∞` off the identity.
    pub fn infinite(group: &FiniteAbelianGroup) -> Self {
        let mut v = vec![ExtValue::Infinity; group.order()];
        v[0] = ExtValue::ZERO;
        Self::unchecked(Carrier::Group(group.clone()), false, v)
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    /// Whether the table lives on the character-group side of its carrier.
    pub fn is_on_dual_side(&self) -> bool {
        self.on_dual
    }

    /// Index set of the table.
    pub fn domain(&self) -> &Domain {
        self.duality.side(self.on_dual)
    }

    /// Index set of the dual table.
    pub fn character_domain(&self) -> &Domain {
        self.duality.side(!self.on_dual)
    }

    pub fn values(&self) -> &[ExtValue] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at a residue vector (an element, character, or class representative).
    pub fn value_at(&self, point: &[u64]) -> Result<ExtValue> {
        self.domain()
            .index_of(point)
            .map(|i| self.values[i])
            .ok_or_else(|| Error::input(format!("{point:?} is not a point of this table")))
    }

    pub fn value_of(&self, x: &GroupElement) -> Result<ExtValue> {
        self.value_at(x.residues())
    }

    pub fn value_of_character(&self, a: &Character) -> Result<ExtValue> {
        self.value_at(a.coeffs())
    }

    /// Re-checks the axioms.
    pub fn validate(&self) -> std::result::Result<(), AxiomViolation> {
        check_axioms(self.domain(), &self.values)
    }

    /// Same index set, so tables can be compared pointwise.
    pub fn is_compatible(&self, other: &QuasiNorm) -> bool {
        self.domain().label() == other.domain().label()
    }

    fn ensure_compatible(&self, other: &QuasiNorm) -> Result<()> {
        if self.is_compatible(other) {
            Ok(())
        } else {
            Err(Error::MixedGroups)
        }
    }

    /// Pointwise `self <= other`.
    pub fn le(&self, other: &QuasiNorm) -> Result<bool> {
        self.ensure_compatible(other)?;
        Ok(self.values.iter().zip(&other.values).all(|(a, b)| a <= b))
    }

    /// Multiplies every value by `c > 0`; `∞` stays `∞`.
    pub fn scale(&self, c: Rational) -> Result<Self> {
        if !c.is_positive() {
            return Err(Error::input("scale factor must be positive"));
        }
        Ok(self.with_values(self.on_dual, self.values.iter().map(|v| v.scale(c)).collect()))
    }

    #[inline]
    fn lambda(&self, p: usize, c: usize) -> Rational {
        self.duality.lambda(self.on_dual, p, c)
    }

    /// `p#(χ) = max { λ(χ(g)) / p(g) : χ(g) ≠ 1 }` on the character group.
    pub fn dual(&self) -> Self {
        let np = self.len();
        let nc = self.character_domain().len();
        let values = (0..nc)
            .map(|c| {
                let mut best = ExtValue::ZERO;
                for p in 0..np {
                    let l = self.lambda(p, c);
                    if l.is_zero() {
                        continue;
                    }
                    let r = self.values[p].divide_into(l);
                    if r > best {
                        best = r;
                        if best == ExtValue::Infinity {
                            break;
                        }
                    }
                }
                best
            })
            .collect();
        self.with_values(!self.on_dual, values)
    }

    /// `p##(ε_x)` evaluated directly: `ε_x(χ) = χ(x)`, so the second dual at `ε_x`
    /// is `max { λ(χ(x)) / p#(χ) : χ(x) ≠ 1 }`.
    pub fn bidual(&self) -> Self {
        let dual = self.dual();
        let np = self.len();
        let nc = dual.len();
        let values = (0..np)
            .map(|p| {
                let mut best = ExtValue::ZERO;
                for c in 0..nc {
                    let l = self.lambda(p, c);
                    if l.is_zero() {
                        continue;
                    }
                    let r = dual.values[c].divide_into(l);
                    if r > best {
                        best = r;
                    }
                }
                best
            })
            .collect();
        self.with_values(self.on_dual, values)
    }

    /// The regularisation; the greatest regular quasi-norm below `self`.
    pub fn regularise(&self) -> Self {
        self.bidual()
    }

    /// Regularisation through the sup-inf formula
    ///
    /// ```text
    /// reg p(x) = sup_{χ(x) ≠ 1} inf_{χ(g) ≠ 1} [λ(χ(x)) / λ(χ(g))] · p(g)
    /// ```
    ///
    /// This shares no code with [`Self::bidual`]; the two must agree exactly.
    /// `λ(χ(x))` is a positive constant for the inner infimum, so it is pulled out.
    pub fn regularise_formula(&self) -> Self {
        let np = self.len();
        let nc = self.character_domain().len();
        let inner: Vec<ExtValue> = (0..nc)
            .map(|c| {
                let mut low = ExtValue::Infinity;
                for g in 0..np {
                    let l = self.lambda(g, c);
                    if l.is_zero() {
                        continue;
                    }
                    let v = match self.values[g] {
                        ExtValue::Infinity => ExtValue::Infinity,
                        ExtValue::Finite(pg) => ExtValue::Finite(pg * l.recip()),
                    };
                    low = low.min(v);
                }
                low
            })
            .collect();
        let values = (0..np)
            .map(|x| {
                let mut best = ExtValue::ZERO;
                for c in 0..nc {
                    let lx = self.lambda(x, c);
                    if lx.is_zero() {
                        continue;
                    }
                    best = best.max(inner[c].scale(lx));
                }
                best
            })
            .collect();
        self.with_values(self.on_dual, values)
    }

    pub fn is_regular(&self) -> RegularityReport {
        let reg = self.regularise();
        let witness = (0..self.len())
            .find(|&i| reg.values[i] != self.values[i])
            .map(|i| RegularityWitness {
                point: self.domain().point(i).to_vec(),
                value: self.values[i],
                regularised: reg.values[i],
            });
        let n = self.len();
        let evaluation_bijective = self.duality.evaluation_image_count(self.on_dual) == n
            && self.character_domain().len() == n;
        let is_regular = witness.is_none();
        RegularityReport {
            is_regular,
            witness,
            is_reflexive: is_regular && evaluation_bijective,
            evaluation_bijective,
        }
    }

    /// Restriction to a subgroup, which becomes a standalone group whose characters
    /// are the restriction classes of ambient characters.
    pub fn restrict(&self, h: &Subgroup) -> Result<Self> {
        let moduli = match self.domain().label() {
            DomainLabel::Group { moduli } => moduli,
            _ => return Err(Error::input("only quasi-norms on a full group can be restricted")),
        };
        if moduli.as_slice() != h.ambient().moduli() {
            return Err(Error::input(format!(
                "subgroup of {} is not a subgroup of Z/{:?}",
                h.ambient(),
                moduli
            )));
        }
        let values = h
            .elements()
            .iter()
            .map(|x| self.value_of(x))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::unchecked(Carrier::Subgroup(h.clone()), false, values))
    }

    fn indices_where(&self, pred: impl Fn(&ExtValue) -> bool) -> Vec<bool> {
        self.values.iter().map(pred).collect()
    }

    fn as_subgroup(&self, member: Vec<bool>) -> Result<Subgroup> {
        let g = self.carrier.ambient();
        match self.domain().label() {
            DomainLabel::Group { .. } => Subgroup::from_closed_set(g, member),
            DomainLabel::Subgroup { .. } => {
                let mut ambient_member = vec![false; g.order()];
                for (i, m) in member.into_iter().enumerate() {
                    if m {
                        ambient_member[g.index_of(self.domain().point(i))] = true;
                    }
                }
                Subgroup::from_closed_set(g, ambient_member)
            }
            DomainLabel::SubgroupCharacters { .. } => Err(Error::input(
                "kernels of quasi-norms on restriction classes are not represented as subgroups",
            )),
        }
    }

    /// `{x : p(x) = 0}`.
    pub fn kernel(&self) -> Result<Subgroup> {
        self.as_subgroup(self.indices_where(ExtValue::is_zero))
    }

    /// `{x : p(x) < ∞}`.
    pub fn fin_part(&self) -> Result<Subgroup> {
        self.as_subgroup(self.indices_where(ExtValue::is_finite))
    }
}

fn ensure_same(qs: &[QuasiNorm]) -> Result<&QuasiNorm> {
    let first = qs
        .first()
        .ok_or_else(|| Error::input("at least one quasi-norm is required"))?;
    for q in &qs[1..] {
        first.ensure_compatible(q)?;
    }
    Ok(first)
}

/// Pointwise supremum.
pub fn join(qs: &[QuasiNorm]) -> Result<QuasiNorm> {
    let first = ensure_same(qs)?;
    let values = (0..first.len())
        .map(|i| qs.iter().map(|q| q.values[i]).max().expect("nonempty"))
        .collect();
    Ok(first.with_values(first.on_dual, values))
}

/// Order infimum among regular quasi-norms: the dual of the pointwise supremum of
/// the duals, pulled back along the evaluation map.
pub fn meet(qs: &[QuasiNorm]) -> Result<QuasiNorm> {
    ensure_same(qs)?;
    let duals: Vec<QuasiNorm> = qs.iter().map(QuasiNorm::dual).collect();
    Ok(join(&duals)?.dual())
}

/// Quasi-norm on the product group taking the maximum of the factor values.
pub fn product(qs: &[QuasiNorm]) -> Result<QuasiNorm> {
    if qs.is_empty() {
        return Err(Error::input("product of an empty family"));
    }
    let mut moduli = Vec::new();
    for q in qs {
        match q.domain().label() {
            DomainLabel::Group { moduli: m } => moduli.extend_from_slice(m),
            _ => return Err(Error::input("product factors must be quasi-norms on full groups")),
        }
    }
    let g = FiniteAbelianGroup::new(&moduli)?;
    let values = g
        .elements()
        .map(|x| {
            let mut offset = 0;
            let mut best = ExtValue::ZERO;
            for q in qs {
                let k = q.domain().point(0).len();
                let part = &x.residues()[offset..offset + k];
                offset += k;
                best = best.max(q.value_at(part).expect("component in range"));
            }
            best
        })
        .collect();
    Ok(QuasiNorm::unchecked(Carrier::Group(g), false, values))
}

/// Random valid quasi-norm, deterministic in `seed`.
///
/// Draws a raw value from `pool` for every element, symmetrises it, and takes the
/// shortest-path closure over the Cayley graph (edge `x → x+g` costs `raw(g)`).
/// The result is the greatest quasi-norm below the symmetrised raw table.
pub fn random_quasinorm(group: &FiniteAbelianGroup, seed: u64, pool: &[ExtValue]) -> Result<QuasiNorm> {
    if pool.is_empty() {
        return Err(Error::input("value pool is empty"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = group.order();
    let duality = group.duality();
    let domain = &duality.primal;
    let mut raw: Vec<ExtValue> = (0..n).map(|_| pool[rng.gen_range(0..pool.len())]).collect();
    raw[0] = ExtValue::ZERO;
    let raw: Vec<ExtValue> = (0..n).map(|i| raw[i].min(raw[domain.neg(i)])).collect();

    // Dense Dijkstra from the identity.
    let mut dist = vec![ExtValue::Infinity; n];
    let mut done = vec![false; n];
    dist[0] = ExtValue::ZERO;
    loop {
        let Some(u) = (0..n).filter(|&i| !done[i] && dist[i].is_finite()).min_by_key(|&i| dist[i])
        else {
            break;
        };
        done[u] = true;
        for g in 1..n {
            if !raw[g].is_finite() {
                continue;
            }
            let v = domain.add(u, g);
            let cand = dist[u].add(raw[g]);
            if cand < dist[v] {
                dist[v] = cand;
            }
        }
    }
    QuasiNorm::checked(Carrier::Group(group.clone()), false, dist)
        .map_err(|e| Error::Contract(format!("subadditive closure is not a quasi-norm: {e}")))
}

/// `ker(p)` as a subgroup; shorthand for [`QuasiNorm::kernel`].
pub fn kernel(q: &QuasiNorm) -> Result<Subgroup> {
    q.kernel()
}

/// `fin(p)` as a subgroup; shorthand for [`QuasiNorm::fin_part`].
pub fn fin_part(q: &QuasiNorm) -> Result<Subgroup> {
    q.fin_part()
}

/// Characters trivial on `h`.
pub fn annihilator(h: &Subgroup) -> Vec<Character> {
    h.annihilator()
}
