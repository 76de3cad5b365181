// SPDX-License-Identifier: Apache-2.0

//! Finite abelian groups `Z/n1 × … × Z/nk`, their characters and subgroups.
//!
//! The character group is indexed by the same moduli: the coefficient vector `a`
//! stands for `χ_a(x) = exp(2πi Σ a_i x_i / n_i)`. Because the pairing is symmetric
//! in `a` and `x`, the canonical evaluation into the second dual is the identity on
//! residue vectors.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use num_integer::Integer;

use crate::duality::Duality;
use crate::error::{Error, Result};
use crate::ext::{rational, Rational};

/// Largest group order the dense tables are built for.
pub const MAX_ORDER: usize = 4096;

/// A residue vector `(x1, …, xk)` with `0 <= xi < ni`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement(Vec<u64>);

/// Coefficient vector of a character; reduced like a group element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Character(Vec<u64>);

impl GroupElement {
    pub fn residues(&self) -> &[u64] {
        &self.0
    }

    /// The character with the same coefficient vector.
    pub fn as_character(&self) -> Character {
        Character(self.0.clone())
    }
}

impl Character {
    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    /// The group element with the same residue vector.
    pub fn as_element(&self) -> GroupElement {
        GroupElement(self.0.clone())
    }
}

pub(crate) fn format_tuple(v: &[u64]) -> String {
    let parts: Vec<String> = v.iter().map(u64::to_string).collect();
    format!("({})", parts.join(","))
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_tuple(&self.0))
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_tuple(&self.0))
    }
}

struct GroupInner {
    moduli: Vec<u64>,
    order: usize,
    exponent: u64,
    duality: OnceLock<Arc<Duality>>,
}

/// The group `Z/n1 × … × Z/nk`. Cheap to clone.
#[derive(Clone)]
pub struct FiniteAbelianGroup {
    inner: Arc<GroupInner>,
}

impl PartialEq for FiniteAbelianGroup {
    fn eq(&self, other: &Self) -> bool {
        self.inner.moduli == other.inner.moduli
    }
}

impl Eq for FiniteAbelianGroup {}

impl Hash for FiniteAbelianGroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.inner.moduli.hash(state);
    }
}

impl fmt::Debug for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteAbelianGroup{:?}", self.inner.moduli)
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.inner.moduli.iter().map(|n| format!("Z/{n}")).collect();
        f.write_str(&parts.join(" x "))
    }
}

impl FiniteAbelianGroup {
    /// Builds `Z/n1 × … × Z/nk`. Every modulus must be at least 1.
    pub fn new(moduli: &[u64]) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::input("a group needs at least one modulus"));
        }
        let mut order: usize = 1;
        let mut exponent: u64 = 1;
        for &n in moduli {
            if n == 0 {
                return Err(Error::input("moduli must be positive"));
            }
            order = order
                .checked_mul(n as usize)
                .filter(|&o| o <= MAX_ORDER)
                .ok_or_else(|| Error::input(format!("group order exceeds {MAX_ORDER}")))?;
            exponent = exponent.lcm(&n);
        }
        Ok(FiniteAbelianGroup {
            inner: Arc::new(GroupInner {
                moduli: moduli.to_vec(),
                order,
                exponent,
                duality: OnceLock::new(),
            }),
        })
    }

    /// The group of order one.
    pub fn trivial() -> Self {
        Self::new(&[1]).expect("trivial group")
    }

    pub fn moduli(&self) -> &[u64] {
        &self.inner.moduli
    }

    pub fn order(&self) -> usize {
        self.inner.order
    }

    pub fn rank(&self) -> usize {
        self.inner.moduli.len()
    }

    /// Least common multiple of the moduli.
    pub fn exponent(&self) -> u64 {
        self.inner.exponent
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.rank()])
    }

    /// Reduces arbitrary integers componentwise.
    pub fn element(&self, residues: &[i64]) -> Result<GroupElement> {
        self.reduce(residues).map(GroupElement)
    }

    /// Reduces arbitrary integers componentwise.
    pub fn character(&self, coeffs: &[i64]) -> Result<Character> {
        self.reduce(coeffs).map(Character)
    }

    fn reduce(&self, v: &[i64]) -> Result<Vec<u64>> {
        self.check_len(v.len())?;
        Ok(v.iter()
            .zip(self.moduli())
            .map(|(&x, &n)| x.rem_euclid(n as i64) as u64)
            .collect())
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: len,
            });
        }
        Ok(())
    }

    /// Checks length and ranges of an already-reduced vector.
    pub fn check_residues(&self, v: &[u64]) -> Result<()> {
        self.check_len(v.len())?;
        for (&x, &n) in v.iter().zip(self.moduli()) {
            if x >= n {
                return Err(Error::input(format!(
                    "residue {x} out of range for modulus {n}"
                )));
            }
        }
        Ok(())
    }

    /// Position of a reduced vector in the lexicographic enumeration.
    pub fn index_of(&self, v: &[u64]) -> usize {
        v.iter()
            .zip(self.moduli())
            .fold(0usize, |acc, (&x, &n)| acc * n as usize + x as usize)
    }

    pub fn element_at(&self, mut index: usize) -> GroupElement {
        let mut v = vec![0u64; self.rank()];
        for (slot, &n) in v.iter_mut().zip(self.moduli()).rev() {
            *slot = (index % n as usize) as u64;
            index /= n as usize;
        }
        GroupElement(v)
    }

    /// All elements in lexicographic order; index `i` is [`Self::element_at`]`(i)`.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order()).map(move |i| self.element_at(i))
    }

    /// All characters, indexed like the elements.
    pub fn characters(&self) -> impl Iterator<Item = Character> + '_ {
        (0..self.order()).map(move |i| Character(self.element_at(i).0))
    }

    pub(crate) fn add_raw(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        x.iter()
            .zip(y)
            .zip(self.moduli())
            .map(|((&a, &b), &n)| (a + b) % n)
            .collect()
    }

    pub(crate) fn neg_raw(&self, x: &[u64]) -> Vec<u64> {
        x.iter()
            .zip(self.moduli())
            .map(|(&a, &n)| (n - a) % n)
            .collect()
    }

    pub fn add(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        GroupElement(self.add_raw(&x.0, &y.0))
    }

    pub fn neg(&self, x: &GroupElement) -> GroupElement {
        GroupElement(self.neg_raw(&x.0))
    }

    pub fn multiple(&self, k: u64, x: &GroupElement) -> GroupElement {
        GroupElement(
            x.0.iter()
                .zip(self.moduli())
                .map(|(&a, &n)| ((a as u128 * k as u128) % n as u128) as u64)
                .collect(),
        )
    }

    /// `Σ a_i x_i · (L / n_i) mod L` where `L` is the exponent; the pairing value
    /// is this numerator over `L`, taken mod 1.
    pub(crate) fn pair_numerator(&self, a: &[u64], x: &[u64]) -> u64 {
        let l = self.exponent() as u128;
        let mut s: u128 = 0;
        for ((&ai, &xi), &n) in a.iter().zip(x).zip(self.moduli()) {
            s = (s + (ai as u128 * xi as u128 % n as u128) * (l / n as u128)) % l;
        }
        s as u64
    }

    /// Arc-length value `λ(s / L)` of a pairing numerator.
    pub(crate) fn lambda_of_numerator(&self, s: u64) -> Rational {
        let l = self.exponent();
        let d = s.min(l - s);
        rational(d as i128, l as i128)
    }

    /// `λ(χ_a(x))`, the distance of `Σ a_i x_i / n_i` to the nearest integer.
    /// Always a reduced rational in `[0, 1/2]`.
    pub fn pair(&self, a: &Character, x: &GroupElement) -> Result<Rational> {
        self.check_residues(&a.0)?;
        self.check_residues(&x.0)?;
        Ok(self.lambda_of_numerator(self.pair_numerator(&a.0, &x.0)))
    }

    fn order_of(&self, v: &[u64]) -> u64 {
        v.iter()
            .zip(self.moduli())
            .fold(1u64, |acc, (&x, &n)| acc.lcm(&(n / n.gcd(&x))))
    }

    /// Least `m >= 1` with `m·x = 0`.
    pub fn element_order(&self, x: &GroupElement) -> Result<u64> {
        self.check_residues(&x.0)?;
        Ok(self.order_of(&x.0))
    }

    /// Least `m >= 1` with `χ_a^m` trivial.
    pub fn character_order(&self, a: &Character) -> Result<u64> {
        self.check_residues(&a.0)?;
        Ok(self.order_of(&a.0))
    }

    pub(crate) fn duality(&self) -> Arc<Duality> {
        self.inner
            .duality
            .get_or_init(|| Arc::new(Duality::for_group(self)))
            .clone()
    }
}

/// One class of ambient characters that restrict to the same character of a subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterClass {
    /// Lexicographically smallest member.
    pub representative: Character,
    pub members: Vec<Character>,
}

struct ClassTable {
    classes: Vec<CharacterClass>,
    by_signature: HashMap<Vec<u64>, usize>,
}

struct SubgroupInner {
    ambient: FiniteAbelianGroup,
    elements: Vec<GroupElement>,
    /// Ambient index -> position in `elements`.
    position: HashMap<usize, usize>,
    generators: Vec<GroupElement>,
    classes: OnceLock<ClassTable>,
    duality: OnceLock<Arc<Duality>>,
}

/// A subgroup, stored as a sorted element list inside its ambient group.
#[derive(Clone)]
pub struct Subgroup {
    inner: Arc<SubgroupInner>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.inner.ambient == other.inner.ambient && self.inner.elements == other.inner.elements
    }
}

impl Eq for Subgroup {}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("ambient", &self.inner.ambient)
            .field("order", &self.order())
            .field("generators", &self.inner.generators)
            .finish()
    }
}

impl Subgroup {
    /// Smallest subgroup containing `gens`. Elements are sorted lexicographically.
    pub fn generate(group: &FiniteAbelianGroup, gens: &[GroupElement]) -> Result<Self> {
        for g in gens {
            group.check_residues(g.residues())?;
        }
        let mut member = vec![false; group.order()];
        member[0] = true;
        let mut current = vec![0usize];
        for g in gens {
            let step = group.index_of(g.residues());
            if member[step] {
                continue;
            }
            // Close under adding g: walk each coset representative along the cycle of g.
            let mut frontier = current.clone();
            while !frontier.is_empty() {
                let mut next = Vec::new();
                for &i in &frontier {
                    let s = group.index_of(&group.add_raw(&group.element_at(i).0, g.residues()));
                    if !member[s] {
                        member[s] = true;
                        next.push(s);
                    }
                }
                current.extend_from_slice(&next);
                frontier = next;
            }
        }
        Ok(Self::build(group, member, gens.to_vec()))
    }

    /// Wraps an index set that is expected to be closed under addition.
    /// Fails with a contract error if it is not.
    pub(crate) fn from_closed_set(group: &FiniteAbelianGroup, member: Vec<bool>) -> Result<Self> {
        if !member[0] {
            return Err(Error::Contract("candidate subgroup misses zero".into()));
        }
        let idx: Vec<usize> = (0..member.len()).filter(|&i| member[i]).collect();
        for &i in &idx {
            let xi = group.element_at(i);
            for &j in &idx {
                let s = group.index_of(&group.add_raw(&xi.0, &group.element_at(j).0));
                if !member[s] {
                    return Err(Error::Contract(format!(
                        "set is not closed: {} + {} leaves it",
                        xi,
                        group.element_at(j)
                    )));
                }
            }
        }
        // Greedy generating set: keep an element whenever it is not yet generated.
        let mut gens = Vec::new();
        let mut span = Subgroup::generate(group, &[])?;
        for &i in &idx {
            let x = group.element_at(i);
            if !span.contains(&x) {
                gens.push(x);
                span = Subgroup::generate(group, &gens)?;
            }
        }
        Ok(Self::build(group, member, gens))
    }

    fn build(group: &FiniteAbelianGroup, member: Vec<bool>, generators: Vec<GroupElement>) -> Self {
        let indices: Vec<usize> = (0..member.len()).filter(|&i| member[i]).collect();
        let elements = indices.iter().map(|&i| group.element_at(i)).collect();
        let position = indices.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        Subgroup {
            inner: Arc::new(SubgroupInner {
                ambient: group.clone(),
                elements,
                position,
                generators,
                classes: OnceLock::new(),
                duality: OnceLock::new(),
            }),
        }
    }

    /// The whole group as a subgroup of itself.
    pub fn full(group: &FiniteAbelianGroup) -> Self {
        Self::build(group, vec![true; group.order()], {
            (0..group.rank())
                .map(|i| {
                    let mut v = vec![0u64; group.rank()];
                    v[i] = 1 % group.moduli()[i];
                    GroupElement(v)
                })
                .collect()
        })
    }

    pub fn ambient(&self) -> &FiniteAbelianGroup {
        &self.inner.ambient
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.inner.elements
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.inner.generators
    }

    pub fn order(&self) -> usize {
        self.inner.elements.len()
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        self.position_of(x.residues()).is_some()
    }

    pub(crate) fn position_of(&self, v: &[u64]) -> Option<usize> {
        if self.ambient().check_residues(v).is_err() {
            return None;
        }
        self.inner.position.get(&self.ambient().index_of(v)).copied()
    }

    /// Is every element of `self` in `other`? Both must share an ambient group.
    pub fn is_contained_in(&self, other: &Subgroup) -> bool {
        self.ambient() == other.ambient() && self.elements().iter().all(|x| other.contains(x))
    }

    fn signature(&self, a: &[u64]) -> Vec<u64> {
        let g = self.ambient();
        self.inner
            .generators
            .iter()
            .map(|h| g.pair_numerator(a, h.residues()))
            .collect()
    }

    fn class_table(&self) -> &ClassTable {
        self.inner.classes.get_or_init(|| {
            let g = self.ambient();
            let mut classes: Vec<CharacterClass> = Vec::new();
            let mut by_signature = HashMap::new();
            // Characters come out in lexicographic order, so the first member of
            // each class is its smallest one.
            for a in g.characters() {
                let sig = self.signature(a.coeffs());
                match by_signature.get(&sig) {
                    Some(&k) => {
                        let class: &mut CharacterClass = &mut classes[k];
                        class.members.push(a);
                    }
                    None => {
                        by_signature.insert(sig, classes.len());
                        classes.push(CharacterClass {
                            representative: a.clone(),
                            members: vec![a],
                        });
                    }
                }
            }
            ClassTable {
                classes,
                by_signature,
            }
        })
    }

    /// The character group of the subgroup, as classes of ambient characters
    /// modulo the annihilator. There are exactly `order()` classes, sorted by
    /// representative; the trivial class comes first.
    pub fn character_classes(&self) -> &[CharacterClass] {
        &self.class_table().classes
    }

    /// Index into [`Self::character_classes`] of the restriction of `a`.
    pub fn class_index(&self, a: &Character) -> Result<usize> {
        self.ambient().check_residues(a.coeffs())?;
        let sig = self.signature(a.coeffs());
        self.class_table()
            .by_signature
            .get(&sig)
            .copied()
            .ok_or_else(|| Error::Contract("character restriction without a class".into()))
    }

    /// Characters that are trivial on the whole subgroup.
    pub fn annihilator(&self) -> Vec<Character> {
        self.character_classes()[0].members.clone()
    }

    pub(crate) fn duality(&self) -> Arc<Duality> {
        self.inner
            .duality
            .get_or_init(|| Arc::new(Duality::for_subgroup(self)))
            .clone()
    }
}

/// Convenience wrapper for [`FiniteAbelianGroup::new`].
pub fn make_group(moduli: &[u64]) -> Result<FiniteAbelianGroup> {
    FiniteAbelianGroup::new(moduli)
}

/// Convenience wrapper for [`Subgroup::generate`].
pub fn subgroup_generate(group: &FiniteAbelianGroup, gens: &[GroupElement]) -> Result<Subgroup> {
    Subgroup::generate(group, gens)
}

/// Convenience wrapper for [`Subgroup::character_classes`].
pub fn subgroup_characters(h: &Subgroup) -> Vec<CharacterClass> {
    h.character_classes().to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(g: &FiniteAbelianGroup, v: &[i64]) -> GroupElement {
        g.element(v).unwrap()
    }

    #[test]
    fn make_group_examples() {
        assert_eq!(make_group(&[1]).unwrap().order(), 1);
        assert_eq!(make_group(&[2, 9]).unwrap().order(), 18);
        let g = make_group(&[4]).unwrap();
        let elems: Vec<_> = g.elements().map(|x| x.residues()[0]).collect();
        assert_eq!(elems, vec![0, 1, 2, 3]);
        assert!(make_group(&[]).is_err());
        assert!(make_group(&[3, 0]).is_err());
        assert!(make_group(&[4096, 2]).is_err());
    }

    #[test]
    fn indexing_round_trips() {
        let g = make_group(&[2, 3, 4]).unwrap();
        for (i, x) in g.elements().enumerate() {
            assert_eq!(g.index_of(x.residues()), i);
        }
        let v: Vec<_> = g.elements().collect();
        let mut sorted = v.clone();
        sorted.sort();
        assert_eq!(v, sorted);
    }

    #[test]
    fn pair_examples() {
        let z2 = make_group(&[2]).unwrap();
        let one = z2.character(&[1]).unwrap();
        assert_eq!(z2.pair(&one, &el(&z2, &[1])).unwrap(), rational(1, 2));
        let z9 = make_group(&[9]).unwrap();
        assert_eq!(
            z9.pair(&z9.character(&[1]).unwrap(), &el(&z9, &[3])).unwrap(),
            rational(1, 3)
        );
        let g = make_group(&[2, 9]).unwrap();
        let zero = g.character(&[0, 0]).unwrap();
        for x in g.elements() {
            assert_eq!(g.pair(&zero, &x).unwrap(), rational(0, 1));
        }
        assert!(matches!(
            g.pair(&zero, &el(&z9, &[1])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn pair_matches_float_oracle() {
        let g = make_group(&[4, 6]).unwrap();
        for a in g.characters() {
            for x in g.elements() {
                let t: f64 = a
                    .coeffs()
                    .iter()
                    .zip(x.residues())
                    .zip(g.moduli())
                    .map(|((&ai, &xi), &n)| (ai * xi) as f64 / n as f64)
                    .sum();
                let want = (t - t.round()).abs();
                let got = g.pair(&a, &x).unwrap();
                let got = *got.numer() as f64 / *got.denom() as f64;
                assert!((got - want).abs() < 1e-12);
                assert!(got <= 0.5);
            }
        }
    }

    #[test]
    fn orders() {
        let z9 = make_group(&[9]).unwrap();
        assert_eq!(z9.element_order(&el(&z9, &[3])).unwrap(), 3);
        assert_eq!(z9.character_order(&z9.character(&[1]).unwrap()).unwrap(), 9);
        let g = make_group(&[2, 9]).unwrap();
        assert_eq!(g.element_order(&el(&g, &[1, 0])).unwrap(), 2);
        for x in g.elements() {
            let m = g.element_order(&x).unwrap();
            assert_eq!(g.order() as u64 % m, 0);
            assert_eq!(g.multiple(m, &x), g.zero());
        }
    }

    #[test]
    fn subgroup_examples() {
        let z4 = make_group(&[4]).unwrap();
        let h = Subgroup::generate(&z4, &[el(&z4, &[2])]).unwrap();
        let v: Vec<_> = h.elements().iter().map(|x| x.residues()[0]).collect();
        assert_eq!(v, vec![0, 2]);

        let g = make_group(&[2, 9]).unwrap();
        let h = Subgroup::generate(&g, &[el(&g, &[1, 3])]).unwrap();
        // Closure oracle: repeated addition of the generator.
        let mut seen = std::collections::BTreeSet::new();
        let mut x = g.zero();
        loop {
            if !seen.insert(x.clone()) {
                break;
            }
            x = g.add(&x, &el(&g, &[1, 3]));
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(h.elements().to_vec(), seen.into_iter().collect::<Vec<_>>());

        let trivial = Subgroup::generate(&g, &[]).unwrap();
        assert_eq!(trivial.elements(), &[g.zero()]);
    }

    #[test]
    fn subgroup_character_classes() {
        let z4 = make_group(&[4]).unwrap();
        let h = Subgroup::generate(&z4, &[el(&z4, &[2])]).unwrap();
        let classes = subgroup_characters(&h);
        assert_eq!(classes.len(), 2);
        assert_eq!(classes[0].representative.coeffs(), &[0]);
        assert_eq!(classes[1].representative.coeffs(), &[1]);

        let full = Subgroup::full(&z4);
        assert!(full.character_classes().iter().all(|c| c.members.len() == 1));
        let trivial = Subgroup::generate(&z4, &[]).unwrap();
        assert_eq!(trivial.character_classes().len(), 1);
    }

    #[test]
    fn from_closed_set_rejects_non_subgroups() {
        let z6 = make_group(&[6]).unwrap();
        let mut m = vec![false; 6];
        m[0] = true;
        m[1] = true;
        assert!(Subgroup::from_closed_set(&z6, m).is_err());
        let mut m = vec![false; 6];
        m[0] = true;
        m[2] = true;
        m[4] = true;
        let h = Subgroup::from_closed_set(&z6, m).unwrap();
        assert_eq!(h.order(), 3);
        assert_eq!(h.generators().len(), 1);
    }
}
