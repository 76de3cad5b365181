// SPDX-License-Identifier: Apache-2.0

//! Dense pairing tables between a finite group and an enumeration of its
//! character group. Quasi-norm tables are indexed by the points of a [`Domain`].

use std::collections::{HashMap, HashSet};

use crate::abelian::{format_tuple, FiniteAbelianGroup, Subgroup};
use crate::ext::Rational;

/// What the points of a domain are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DomainLabel {
    /// All of `Z/n1 × … × Z/nk`; also used for its character group.
    Group { moduli: Vec<u64> },
    /// A subgroup, by its ambient moduli and sorted elements.
    Subgroup {
        moduli: Vec<u64>,
        elements: Vec<Vec<u64>>,
    },
    /// Characters of a subgroup, each point the smallest ambient representative of its class.
    SubgroupCharacters {
        moduli: Vec<u64>,
        elements: Vec<Vec<u64>>,
    },
}

/// A finite abelian group as an indexed point set with addition and negation tables.
/// Point 0 is always the identity.
#[derive(Debug)]
pub struct Domain {
    label: DomainLabel,
    points: Vec<Vec<u64>>,
    index: HashMap<Vec<u64>, usize>,
    add: Vec<u32>,
    neg: Vec<u32>,
}

impl Domain {
    fn new(label: DomainLabel, points: Vec<Vec<u64>>, add: Vec<u32>, neg: Vec<u32>) -> Self {
        let index = points
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        Domain {
            label,
            points,
            index,
            add,
            neg,
        }
    }

    pub fn label(&self) -> &DomainLabel {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Residue vector (or class representative) of point `i`.
    pub fn point(&self, i: usize) -> &[u64] {
        &self.points[i]
    }

    pub fn points(&self) -> &[Vec<u64>] {
        &self.points
    }

    pub fn index_of(&self, v: &[u64]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn format_point(&self, i: usize) -> String {
        format_tuple(&self.points[i])
    }

    #[inline]
    pub(crate) fn add(&self, i: usize, j: usize) -> usize {
        self.add[i * self.len() + j] as usize
    }

    #[inline]
    pub(crate) fn neg(&self, i: usize) -> usize {
        self.neg[i] as usize
    }
}

/// A group, its character group, and the exact table `λ(χ_j(x_i))`.
#[derive(Debug)]
pub struct Duality {
    pub(crate) primal: Domain,
    pub(crate) dual: Domain,
    /// Row-major, `primal.len() × dual.len()`.
    pairing: Vec<Rational>,
    /// Same layout: the exact phase `Σ a_i x_i L / n_i mod L` behind each entry.
    phases: Vec<u64>,
}

impl Duality {
    pub(crate) fn for_group(g: &FiniteAbelianGroup) -> Self {
        let n = g.order();
        let points: Vec<Vec<u64>> = g.elements().map(|x| x.residues().to_vec()).collect();
        let mut add = Vec::with_capacity(n * n);
        for x in &points {
            for y in &points {
                add.push(g.index_of(&g.add_raw(x, y)) as u32);
            }
        }
        let neg = points
            .iter()
            .map(|x| g.index_of(&g.neg_raw(x)) as u32)
            .collect::<Vec<_>>();
        let mut phases = Vec::with_capacity(n * n);
        for x in &points {
            for a in &points {
                phases.push(g.pair_numerator(a, x));
            }
        }
        let label = DomainLabel::Group {
            moduli: g.moduli().to_vec(),
        };
        let primal = Domain::new(label.clone(), points.clone(), add.clone(), neg.clone());
        let dual = Domain::new(label, points, add, neg);
        Self::finish(g, primal, dual, phases)
    }

    pub(crate) fn for_subgroup(h: &Subgroup) -> Self {
        let g = h.ambient();
        let elems: Vec<Vec<u64>> = h.elements().iter().map(|x| x.residues().to_vec()).collect();
        let m = elems.len();
        let pos = |v: &[u64]| h.position_of(v).expect("subgroup is closed") as u32;
        let mut add = Vec::with_capacity(m * m);
        for x in &elems {
            for y in &elems {
                add.push(pos(&g.add_raw(x, y)));
            }
        }
        let neg: Vec<u32> = elems.iter().map(|x| pos(&g.neg_raw(x))).collect();

        let classes = h.character_classes();
        let reps: Vec<Vec<u64>> = classes
            .iter()
            .map(|c| c.representative.coeffs().to_vec())
            .collect();
        let class_of = |v: Vec<u64>| {
            h.class_index(&g.character(&v.iter().map(|&x| x as i64).collect::<Vec<_>>()).unwrap())
                .expect("restriction has a class") as u32
        };
        let mut cadd = Vec::with_capacity(m * m);
        for a in &reps {
            for b in &reps {
                cadd.push(class_of(g.add_raw(a, b)));
            }
        }
        let cneg: Vec<u32> = reps.iter().map(|a| class_of(g.neg_raw(a))).collect();

        let mut phases = Vec::with_capacity(m * m);
        for x in &elems {
            for a in &reps {
                phases.push(g.pair_numerator(a, x));
            }
        }
        let moduli = g.moduli().to_vec();
        let primal = Domain::new(
            DomainLabel::Subgroup {
                moduli: moduli.clone(),
                elements: elems.clone(),
            },
            elems.clone(),
            add,
            neg,
        );
        let dual = Domain::new(
            DomainLabel::SubgroupCharacters {
                moduli,
                elements: elems,
            },
            reps,
            cadd,
            cneg,
        );
        Self::finish(g, primal, dual, phases)
    }

    fn finish(g: &FiniteAbelianGroup, primal: Domain, dual: Domain, phases: Vec<u64>) -> Self {
        let pairing = phases.iter().map(|&s| g.lambda_of_numerator(s)).collect();
        Duality {
            primal,
            dual,
            pairing,
            phases,
        }
    }

    pub(crate) fn side(&self, on_dual: bool) -> &Domain {
        if on_dual {
            &self.dual
        } else {
            &self.primal
        }
    }

    /// `λ` of the point `p` of one side against the point `c` of the other side.
    #[inline]
    pub(crate) fn lambda(&self, on_dual: bool, p: usize, c: usize) -> Rational {
        if on_dual {
            self.pairing[c * self.dual.len() + p]
        } else {
            self.pairing[p * self.dual.len() + c]
        }
    }

    /// Distinct images of the canonical map into the second dual, for the given side.
    /// The map from the dual side back is injective iff characters separate points,
    /// which on finite groups holds for both sides; we count rather than assume.
    pub(crate) fn evaluation_image_count(&self, on_dual: bool) -> usize {
        let (np, nd) = (self.primal.len(), self.dual.len());
        if on_dual {
            (0..nd)
                .map(|c| (0..np).map(|p| self.phases[p * nd + c]).collect::<Vec<_>>())
                .collect::<HashSet<_>>()
                .len()
        } else {
            (0..np)
                .map(|p| &self.phases[p * nd..(p + 1) * nd])
                .collect::<HashSet<_>>()
                .len()
        }
    }
}
