//! Atoms, conditions and binary relations over one finite state space.
//!
//! Atoms are interned to their position in the space, so a [`Condition`] is a
//! single `u64` bit mask and a [`Relation`] is one mask per source atom (its
//! row). Every binary operation checks that both operands share a space;
//! mixing spaces is a [`ModelError::SpaceMismatch`], never a coercion.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{ModelError, Result};

/// Largest supported universe: conditions are single 64-bit masks.
pub const MAX_ATOMS: usize = 64;

/// A named finite universe of atoms.
pub struct StateSpace {
    name: String,
    atoms: Vec<String>,
    index: HashMap<String, usize>,
}

impl StateSpace {
    pub fn new<I, S>(name: impl Into<String>, atoms: I) -> Result<Arc<StateSpace>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let name = name.into();
        let atoms: Vec<String> = atoms.into_iter().map(Into::into).collect();
        if atoms.is_empty() {
            return Err(ModelError::EmptySpace { name });
        }
        if atoms.len() > MAX_ATOMS {
            return Err(ModelError::TooManyAtoms {
                space: name,
                count: atoms.len(),
                max: MAX_ATOMS,
            });
        }
        let mut index = HashMap::with_capacity(atoms.len());
        for (i, atom) in atoms.iter().enumerate() {
            if index.insert(atom.clone(), i).is_some() {
                return Err(ModelError::DuplicateAtom {
                    space: name,
                    atom: atom.clone(),
                });
            }
        }
        Ok(Arc::new(StateSpace { name, atoms, index }))
    }

    /// A space of `n` atoms named `0`, `1`, ... `n-1`.
    pub fn numbered(n: usize) -> Result<Arc<StateSpace>> {
        StateSpace::new(format!("S{n}"), (0..n).map(|i| i.to_string()))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn atom(&self, index: usize) -> &str {
        &self.atoms[index]
    }

    pub fn index_of(&self, atom: &str) -> Result<usize> {
        self.index
            .get(atom)
            .copied()
            .ok_or_else(|| ModelError::UnknownAtom {
                space: self.name.clone(),
                atom: atom.to_string(),
            })
    }

    pub fn contains_atom(&self, atom: &str) -> bool {
        self.index.contains_key(atom)
    }

    /// Bit mask with one bit per atom.
    pub fn full_mask(&self) -> u64 {
        mask_for(self.atoms.len())
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index < self.atoms.len() {
            Ok(())
        } else {
            Err(ModelError::IndexOutOfRange {
                space: self.name.clone(),
                index,
                size: self.atoms.len(),
            })
        }
    }
}

impl PartialEq for StateSpace {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.atoms == other.atoms
    }
}

impl Eq for StateSpace {}

impl fmt::Debug for StateSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {{{}}}", self.name, self.atoms.join(","))
    }
}

fn mask_for(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn same_space(a: &Arc<StateSpace>, b: &Arc<StateSpace>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub(crate) fn check_same(a: &Arc<StateSpace>, b: &Arc<StateSpace>) -> Result<()> {
    if same_space(a, b) {
        Ok(())
    } else {
        Err(ModelError::SpaceMismatch {
            left: a.name.clone(),
            right: b.name.clone(),
        })
    }
}

fn bit_indices(mut bits: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if bits == 0 {
            None
        } else {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        }
    })
}

/// A subset of a state space: preconditions, guards, invariants.
#[derive(Clone)]
pub struct Condition {
    space: Arc<StateSpace>,
    bits: u64,
}

impl Condition {
    /// `False`.
    pub fn empty(space: &Arc<StateSpace>) -> Condition {
        Condition {
            space: space.clone(),
            bits: 0,
        }
    }

    /// `True`, the whole space.
    pub fn full(space: &Arc<StateSpace>) -> Condition {
        Condition {
            space: space.clone(),
            bits: space.full_mask(),
        }
    }

    pub fn from_bits(space: &Arc<StateSpace>, bits: u64) -> Result<Condition> {
        if bits & !space.full_mask() != 0 {
            let index = 63 - (bits & !space.full_mask()).leading_zeros() as usize;
            return Err(ModelError::IndexOutOfRange {
                space: space.name.clone(),
                index,
                size: space.len(),
            });
        }
        Ok(Condition {
            space: space.clone(),
            bits,
        })
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(
        space: &Arc<StateSpace>,
        indices: I,
    ) -> Result<Condition> {
        let mut bits = 0;
        for i in indices {
            space.check_index(i)?;
            bits |= 1 << i;
        }
        Ok(Condition {
            space: space.clone(),
            bits,
        })
    }

    pub fn from_atoms<I, S>(space: &Arc<StateSpace>, atoms: I) -> Result<Condition>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut bits = 0;
        for atom in atoms {
            bits |= 1 << space.index_of(atom.as_ref())?;
        }
        Ok(Condition {
            space: space.clone(),
            bits,
        })
    }

    pub fn space(&self) -> &Arc<StateSpace> {
        &self.space
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, index: usize) -> bool {
        index < 64 && self.bits >> index & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        self.bits == self.space.full_mask()
    }

    /// Member indices in ascending order.
    pub fn indices(&self) -> impl Iterator<Item = usize> {
        bit_indices(self.bits)
    }

    pub fn atom_names(&self) -> impl Iterator<Item = &str> + '_ {
        self.indices().map(move |i| self.space.atom(i))
    }

    fn with_bits(&self, bits: u64) -> Condition {
        Condition {
            space: self.space.clone(),
            bits,
        }
    }

    /// Intersection (`and`).
    pub fn and(&self, other: &Condition) -> Result<Condition> {
        check_same(&self.space, &other.space)?;
        Ok(self.with_bits(self.bits & other.bits))
    }

    /// Union (`or`).
    pub fn or(&self, other: &Condition) -> Result<Condition> {
        check_same(&self.space, &other.space)?;
        Ok(self.with_bits(self.bits | other.bits))
    }

    /// Complement within the space (`not`).
    pub fn not(&self) -> Condition {
        self.with_bits(!self.bits & self.space.full_mask())
    }

    pub fn diff(&self, other: &Condition) -> Result<Condition> {
        check_same(&self.space, &other.space)?;
        Ok(self.with_bits(self.bits & !other.bits))
    }

    /// `self implies other`, i.e. `self ⊆ other`.
    pub fn implies(&self, other: &Condition) -> Result<bool> {
        check_same(&self.space, &other.space)?;
        Ok(self.bits & !other.bits == 0)
    }

    pub fn is_disjoint(&self, other: &Condition) -> Result<bool> {
        check_same(&self.space, &other.space)?;
        Ok(self.bits & other.bits == 0)
    }
}

impl PartialEq for Condition {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits && same_space(&self.space, &other.space)
    }
}

impl Eq for Condition {}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, atom) in self.atom_names().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            f.write_str(atom)?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

type Rows = SmallVec<[u64; 8]>;

/// A set of ordered atom pairs over one state space.
#[derive(Clone)]
pub struct Relation {
    space: Arc<StateSpace>,
    rows: Rows,
}

impl Relation {
    pub fn empty(space: &Arc<StateSpace>) -> Relation {
        Relation {
            space: space.clone(),
            rows: SmallVec::from_elem(0, space.len()),
        }
    }

    /// `S × S`.
    pub fn full(space: &Arc<StateSpace>) -> Relation {
        Relation {
            space: space.clone(),
            rows: SmallVec::from_elem(space.full_mask(), space.len()),
        }
    }

    pub fn identity(space: &Arc<StateSpace>) -> Relation {
        Relation {
            space: space.clone(),
            rows: (0..space.len()).map(|i| 1u64 << i).collect(),
        }
    }

    /// `C × D`.
    pub fn product(domain: &Condition, codomain: &Condition) -> Result<Relation> {
        check_same(&domain.space, &codomain.space)?;
        let n = domain.space.len();
        Ok(Relation {
            space: domain.space.clone(),
            rows: (0..n)
                .map(|x| if domain.contains(x) { codomain.bits } else { 0 })
                .collect(),
        })
    }

    /// Builds a relation from one row mask per source atom.
    pub fn from_rows(space: &Arc<StateSpace>, rows: &[u64]) -> Result<Relation> {
        if rows.len() != space.len() {
            return Err(ModelError::Invalid(format!(
                "expected {} rows for state space `{}`, got {}",
                space.len(),
                space.name,
                rows.len()
            )));
        }
        for &row in rows {
            Condition::from_bits(space, row)?;
        }
        Ok(Relation {
            space: space.clone(),
            rows: rows.iter().copied().collect(),
        })
    }

    pub fn from_index_pairs<I>(space: &Arc<StateSpace>, pairs: I) -> Result<Relation>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rel = Relation::empty(space);
        for (x, y) in pairs {
            space.check_index(x)?;
            space.check_index(y)?;
            rel.rows[x] |= 1 << y;
        }
        Ok(rel)
    }

    pub fn from_pairs<I, S>(space: &Arc<StateSpace>, pairs: I) -> Result<Relation>
    where
        I: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let mut rel = Relation::empty(space);
        for (x, y) in pairs {
            let x = space.index_of(x.as_ref())?;
            let y = space.index_of(y.as_ref())?;
            rel.rows[x] |= 1 << y;
        }
        Ok(rel)
    }

    pub fn space(&self) -> &Arc<StateSpace> {
        &self.space
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Successors of one atom, as a mask.
    pub fn row(&self, x: usize) -> u64 {
        self.rows[x]
    }

    /// Predecessors of one atom, as a mask.
    pub fn column(&self, y: usize) -> u64 {
        self.rows
            .iter()
            .enumerate()
            .filter(|(_, &row)| row >> y & 1 == 1)
            .fold(0, |acc, (x, _)| acc | 1 << x)
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        x < self.rows.len() && y < 64 && self.rows[x] >> y & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    /// Pairs in lexicographic index order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(x, &row)| bit_indices(row).map(move |y| (x, y)))
    }

    pub fn atom_pairs(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.pairs()
            .map(move |(x, y)| (self.space.atom(x), self.space.atom(y)))
    }

    /// Domain: atoms with at least one successor.
    pub fn domain(&self) -> Condition {
        let bits = self
            .rows
            .iter()
            .enumerate()
            .filter(|(_, &row)| row != 0)
            .fold(0, |acc, (x, _)| acc | 1 << x);
        Condition {
            space: self.space.clone(),
            bits,
        }
    }

    /// Range: atoms with at least one predecessor.
    pub fn range(&self) -> Condition {
        Condition {
            space: self.space.clone(),
            bits: self.rows.iter().fold(0, |acc, &row| acc | row),
        }
    }

    /// `r(C) = { y | ∃x ∈ C, (x,y) ∈ r }`.
    pub fn image(&self, c: &Condition) -> Result<Condition> {
        check_same(&self.space, &c.space)?;
        let bits = bit_indices(c.bits).fold(0, |acc, x| acc | self.rows[x]);
        Ok(c.with_bits(bits))
    }

    /// `r⁻¹(C) = { x | ∃y ∈ C, (x,y) ∈ r }`.
    pub fn preimage(&self, c: &Condition) -> Result<Condition> {
        check_same(&self.space, &c.space)?;
        let bits = self
            .rows
            .iter()
            .enumerate()
            .filter(|(_, &row)| row & c.bits != 0)
            .fold(0, |acc, (x, _)| acc | 1 << x);
        Ok(c.with_bits(bits))
    }

    /// Relational composition in application order: `(r ; s)(X) = s(r(X))`.
    pub fn compose(&self, other: &Relation) -> Result<Relation> {
        check_same(&self.space, &other.space)?;
        let rows = self
            .rows
            .iter()
            .map(|&row| bit_indices(row).fold(0, |acc, y| acc | other.rows[y]))
            .collect();
        Ok(Relation {
            space: self.space.clone(),
            rows,
        })
    }

    /// `r / C = r ∩ (C × S)`.
    pub fn restrict(&self, c: &Condition) -> Result<Relation> {
        check_same(&self.space, &c.space)?;
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(x, &row)| if c.contains(x) { row } else { 0 })
            .collect();
        Ok(Relation {
            space: self.space.clone(),
            rows,
        })
    }

    /// `r \ C = r ∩ (S × C)`.
    pub fn corestrict(&self, c: &Condition) -> Result<Relation> {
        check_same(&self.space, &c.space)?;
        Ok(self.map_rows(|row| row & c.bits))
    }

    fn map_rows(&self, f: impl Fn(u64) -> u64) -> Relation {
        Relation {
            space: self.space.clone(),
            rows: self.rows.iter().map(|&r| f(r)).collect(),
        }
    }

    fn zip_rows(&self, other: &Relation, f: impl Fn(u64, u64) -> u64) -> Result<Relation> {
        check_same(&self.space, &other.space)?;
        Ok(Relation {
            space: self.space.clone(),
            rows: self
                .rows
                .iter()
                .zip(other.rows.iter())
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn union(&self, other: &Relation) -> Result<Relation> {
        self.zip_rows(other, |a, b| a | b)
    }

    pub fn inter(&self, other: &Relation) -> Result<Relation> {
        self.zip_rows(other, |a, b| a & b)
    }

    pub fn diff(&self, other: &Relation) -> Result<Relation> {
        self.zip_rows(other, |a, b| a & !b)
    }

    pub fn is_subset(&self, other: &Relation) -> Result<bool> {
        check_same(&self.space, &other.space)?;
        Ok(self
            .rows
            .iter()
            .zip(other.rows.iter())
            .all(|(&a, &b)| a & !b == 0))
    }

    /// Every atom has at most one successor.
    pub fn is_function(&self) -> bool {
        self.rows.iter().all(|r| r.count_ones() <= 1)
    }

    /// Every atom has at least one successor.
    pub fn is_total(&self) -> bool {
        self.rows.iter().all(|&r| r != 0)
    }

    /// No infinite chain `x0 r x1 r x2 ...` exists.
    ///
    /// On a finite set an infinite chain must revisit an atom, so this is
    /// acyclicity (self-loops included). Atoms without successors into the
    /// surviving set are peeled off until nothing changes; the relation is
    /// well-founded iff every atom gets peeled.
    pub fn is_well_founded(&self) -> bool {
        let mut alive = self.space.full_mask();
        loop {
            let sinks = bit_indices(alive)
                .filter(|&x| self.rows[x] & alive == 0)
                .fold(0, |acc, x| acc | 1 << x);
            if sinks == 0 {
                return alive == 0;
            }
            alive &= !sinks;
        }
    }
}

impl PartialEq for Relation {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && same_space(&self.space, &other.space)
    }
}

impl Eq for Relation {}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (x, y)) in self.atom_pairs().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "({x},{y})")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> Arc<StateSpace> {
        StateSpace::numbered(3).unwrap()
    }

    fn cond(s: &Arc<StateSpace>, xs: &[usize]) -> Condition {
        Condition::from_indices(s, xs.iter().copied()).unwrap()
    }

    fn rel(s: &Arc<StateSpace>, ps: &[(usize, usize)]) -> Relation {
        Relation::from_index_pairs(s, ps.iter().copied()).unwrap()
    }

    #[test]
    fn space_construction_rejects_bad_universes() {
        assert!(matches!(
            StateSpace::new("E", Vec::<String>::new()),
            Err(ModelError::EmptySpace { .. })
        ));
        assert!(matches!(
            StateSpace::new("D", ["a", "b", "a"]),
            Err(ModelError::DuplicateAtom { .. })
        ));
        assert!(matches!(
            StateSpace::new("B", (0..65).map(|i| i.to_string())),
            Err(ModelError::TooManyAtoms { .. })
        ));
    }

    #[test]
    fn condition_algebra() {
        let s = s3();
        assert_eq!(cond(&s, &[0, 1]).not(), cond(&s, &[2]));
        assert_eq!(cond(&s, &[0, 1]).and(&cond(&s, &[1, 2])).unwrap(), cond(&s, &[1]));
        assert_eq!(cond(&s, &[0]).or(&cond(&s, &[2])).unwrap(), cond(&s, &[0, 2]));
        assert_eq!(cond(&s, &[0, 1]).diff(&cond(&s, &[1])).unwrap(), cond(&s, &[0]));
        assert!(cond(&s, &[0]).implies(&cond(&s, &[0, 1])).unwrap());
        assert!(!cond(&s, &[0, 2]).implies(&cond(&s, &[0, 1])).unwrap());
    }

    #[test]
    fn mixing_spaces_is_an_error() {
        let a = s3();
        let b = StateSpace::new("T", ["0", "1", "2"]).unwrap();
        let err = cond(&a, &[0]).and(&cond(&b, &[0])).unwrap_err();
        assert!(matches!(err, ModelError::SpaceMismatch { .. }));
        assert!(rel(&a, &[]).image(&cond(&b, &[0])).is_err());
        assert!(rel(&a, &[]).compose(&rel(&b, &[])).is_err());
    }

    #[test]
    fn structurally_equal_spaces_are_compatible() {
        let a = s3();
        let b = s3();
        assert!(cond(&a, &[0]).and(&cond(&b, &[0])).is_ok());
    }

    #[test]
    fn unknown_atoms_are_rejected() {
        let s = StateSpace::new("S", ["a", "b"]).unwrap();
        assert!(matches!(
            Condition::from_atoms(&s, ["x"]),
            Err(ModelError::UnknownAtom { .. })
        ));
        assert!(Relation::from_pairs(&s, [("a", "z")]).is_err());
        assert!(Condition::from_indices(&s, [2]).is_err());
        assert!(Condition::from_bits(&s, 0b100).is_err());
    }

    #[test]
    fn image_examples() {
        let s = s3();
        let r = rel(&s, &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(r.image(&cond(&s, &[0])).unwrap(), cond(&s, &[1, 2]));
        assert!(rel(&s, &[]).image(&cond(&s, &[0, 1, 2])).unwrap().is_empty());
        // image of a preimage need not contain the original set
        let r = rel(&s, &[(0, 1)]);
        let back = r.preimage(&cond(&s, &[1, 2])).unwrap();
        assert_eq!(back, cond(&s, &[0]));
        assert_eq!(r.image(&back).unwrap(), cond(&s, &[1]));
    }

    #[test]
    fn preimage_examples() {
        let s = s3();
        let r = rel(&s, &[(0, 1), (1, 2)]);
        assert_eq!(r.preimage(&cond(&s, &[2])).unwrap(), cond(&s, &[1]));
        assert!(r.preimage(&cond(&s, &[])).unwrap().is_empty());
        let r = rel(&s, &[(1, 1), (1, 2)]);
        assert_eq!(r.preimage(&cond(&s, &[1])).unwrap(), cond(&s, &[1]));
    }

    #[test]
    fn composition_examples() {
        let s = s3();
        let r = rel(&s, &[(1, 1), (1, 2)]);
        let t = rel(&s, &[(1, 1), (2, 2)]);
        assert_eq!(r.compose(&t).unwrap(), rel(&s, &[(1, 1), (1, 2)]));
        assert_eq!(r.compose(&Relation::identity(&s)).unwrap(), r);
        assert!(rel(&s, &[]).compose(&t).unwrap().is_empty());
    }

    #[test]
    fn restriction_examples() {
        let s = s3();
        let r = rel(&s, &[(0, 1), (1, 2)]);
        assert_eq!(r.restrict(&cond(&s, &[0])).unwrap(), rel(&s, &[(0, 1)]));
        assert_eq!(r.restrict(&Condition::full(&s)).unwrap(), r);
        let r = rel(&s, &[(1, 1), (1, 2)]);
        assert_eq!(r.corestrict(&cond(&s, &[1])).unwrap(), rel(&s, &[(1, 1)]));
    }

    #[test]
    fn relation_algebra_examples() {
        let s = s3();
        let r = rel(&s, &[(0, 1), (0, 2)]);
        assert_eq!(Relation::empty(&s).union(&r).unwrap(), r);
        assert_eq!(r.diff(&rel(&s, &[(0, 1)])).unwrap(), rel(&s, &[(0, 2)]));
        assert_eq!(r.inter(&r).unwrap(), r);
    }

    #[test]
    fn function_and_totality() {
        let s = s3();
        let id = Relation::identity(&s);
        assert!(id.is_function() && id.is_total());
        assert!(!rel(&s, &[(0, 1), (0, 2)]).is_function());
        let full = Relation::full(&s);
        assert!(full.is_total() && !full.is_function());
        assert!(Relation::empty(&s).is_function());
        assert!(!Relation::empty(&s).is_total());
    }

    #[test]
    fn well_foundedness_examples() {
        let s = s3();
        assert!(rel(&s, &[(0, 1), (1, 2)]).is_well_founded());
        assert!(!rel(&s, &[(0, 0)]).is_well_founded());
        assert!(!rel(&s, &[(0, 1), (1, 0)]).is_well_founded());
        assert!(Relation::empty(&s).is_well_founded());
    }

    #[test]
    fn domain_range_and_columns() {
        let s = s3();
        let r = rel(&s, &[(0, 1), (2, 1)]);
        assert_eq!(r.domain(), cond(&s, &[0, 2]));
        assert_eq!(r.range(), cond(&s, &[1]));
        assert_eq!(r.column(1), 0b101);
        assert_eq!(r.len(), 2);
        assert_eq!(r.to_string(), "{(0,1),(2,1)}");
        assert_eq!(cond(&s, &[0, 2]).to_string(), "{0,2}");
    }
}
