//! States, eidostates and their exact measures.
//!
//! A [`Term`] is an ordered, non-associative pairing tree over [`Atom`]s. An
//! [`Eidostate`] is a finite nonempty set of terms sharing one content
//! vector; eidostates combine by Cartesian product. Entropy is carried as its
//! exponential, the [`Weight`] `2^S`, which is an exact positive rational for
//! everything this crate can build.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::{self, Rational};

/// Name of the content component counted by coins.
pub const COINS: &str = "coins";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TermError {
    #[error("an eidostate must contain at least one state")]
    Empty,
    #[error("states `{first}` and `{second}` carry different content ({first_content} vs {second_content})")]
    NonUniform {
        first: String,
        second: String,
        first_content: String,
        second_content: String,
    },
    #[error("coin set element `{0}` is not built from coins")]
    NotCoin(String),
    #[error("abstract atom `{0}` must have a positive weight")]
    NonPositiveWeight(String),
    #[error("mechanical atom `{0}` must have weight 1")]
    MechanicalWeight(String),
    #[error("a stack needs at least one coin")]
    EmptyStack,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Face {
    Heads,
    Tails,
}

/// Additive conserved quantities; absent components are zero.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ContentVector(BTreeMap<String, Rational>);

impl ContentVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(component: &str, value: Rational) -> Self {
        let mut v = Self::zero();
        v.set(component, value);
        v
    }

    pub fn coins(n: i64) -> Self {
        Self::single(COINS, rational::int(n))
    }

    pub fn get(&self, component: &str) -> Rational {
        self.0
            .get(component)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, component: &str, value: Rational) {
        if value.is_zero() {
            self.0.remove(component);
        } else {
            self.0.insert(component.to_string(), value);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn components(&self) -> impl Iterator<Item = (&str, &Rational)> {
        self.0.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut out = Self::zero();
        for (c, v) in &self.0 {
            out.set(c, v * k);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (c, v) in &other.0 {
            let sum = out.get(c) + v;
            out.set(c, sum);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    /// If `self = k · unit` for a single rational `k`, returns `k`.
    pub fn ratio_to(&self, unit: &Self) -> Option<Rational> {
        if unit.is_zero() {
            return self.is_zero().then(Rational::zero);
        }
        let (c, u) = unit.0.iter().next().expect("nonzero unit");
        let k = self.get(c) / u;
        (self == &unit.scale(&k)).then_some(k)
    }
}

impl fmt::Display for ContentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}: {}", rational::Display(v))?;
        }
        f.write_str("}")
    }
}

/// `2^S` as an exact positive rational.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(Rational);

impl Weight {
    pub fn new(value: Rational) -> Option<Self> {
        value.is_positive().then_some(Self(value))
    }

    pub fn one() -> Self {
        Self(Rational::one())
    }

    pub fn from_int(n: u64) -> Self {
        assert!(n > 0, "weights are positive");
        Self(Rational::from_integer(BigInt::from(n)))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn into_value(self) -> Rational {
        self.0
    }

    pub fn entropy_f64(&self) -> f64 {
        rational::log2_rational(&self.0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }
}

impl std::ops::Mul for &Weight {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        Weight(&self.0 * &rhs.0)
    }
}

impl std::ops::Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(&self.0 + &rhs.0)
    }
}

impl std::iter::Sum for Weight {
    fn sum<I: Iterator<Item = Weight>>(iter: I) -> Weight {
        Weight(iter.map(|w| w.0).sum())
    }
}

impl std::iter::Product for Weight {
    fn product<I: Iterator<Item = Weight>>(iter: I) -> Weight {
        Weight(iter.map(|w| w.0).product())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&rational::format_rational(&self.0))
    }
}

/// A nonempty set of coin terms that all hold the same number of coins.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoinSet(Arc<BTreeSet<Term>>);

impl CoinSet {
    pub fn new(elements: impl IntoIterator<Item = Term>) -> Result<Self, TermError> {
        let set: BTreeSet<Term> = elements.into_iter().collect();
        let mut coins = None;
        for t in &set {
            if !t.is_coin_term() {
                return Err(TermError::NotCoin(t.to_string()));
            }
            let q = t.leaf_count();
            match coins {
                None => coins = Some((q, t.clone())),
                Some((q0, ref t0)) if q0 != q => {
                    return Err(TermError::NonUniform {
                        first: t0.to_string(),
                        second: t.to_string(),
                        first_content: ContentVector::coins(q0 as i64).to_string(),
                        second_content: ContentVector::coins(q as i64).to_string(),
                    })
                }
                _ => {}
            }
        }
        if set.is_empty() {
            return Err(TermError::Empty);
        }
        Ok(Self(Arc::new(set)))
    }

    /// `{h, t}`, the base of the basic boxes.
    pub fn basic() -> Self {
        Self::new([Term::heads(), Term::tails()]).expect("valid coin set")
    }

    pub fn elements(&self) -> &BTreeSet<Term> {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Coins held by each element.
    pub fn coin_value(&self) -> u64 {
        self.0.iter().next().expect("nonempty").leaf_count() as u64
    }

    pub fn is_basic(&self) -> bool {
        *self == Self::basic()
    }

    pub fn to_eidostate(&self) -> Eidostate {
        Eidostate::from_sorted_unchecked(self.0.as_ref().clone())
    }
}

/// A user-declared state with its own content and weight.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AbstractAtom {
    pub name: String,
    pub content: ContentVector,
    pub weight: Weight,
    pub mechanical: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    Coin(Face),
    Record(Arc<str>),
    Box { base: CoinSet, level: u32 },
    Abstract(Arc<AbstractAtom>),
}

#[derive(Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Node {
    Leaf(Atom),
    Pair(Term, Term),
}

#[derive(Debug)]
struct Inner {
    node: Node,
    content: ContentVector,
    weight: Weight,
    leaves: usize,
}

/// A single state: a leaf atom or an ordered pair of states.
///
/// Content, weight and leaf count are computed once at construction.
#[derive(Debug, Clone)]
pub struct Term(Arc<Inner>);

impl PartialEq for Term {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.node == other.0.node
    }
}

impl Eq for Term {}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Term {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return std::cmp::Ordering::Equal;
        }
        self.0.node.cmp(&other.0.node)
    }
}

impl std::hash::Hash for Term {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.node.hash(state)
    }
}

impl Term {
    pub fn atom(atom: Atom) -> Self {
        Self(Arc::new(Inner {
            content: atom.content(),
            weight: atom.weight(),
            leaves: 1,
            node: Node::Leaf(atom),
        }))
    }

    pub fn pair(left: Term, right: Term) -> Self {
        Self(Arc::new(Inner {
            content: left.0.content.add(&right.0.content),
            weight: &left.0.weight * &right.0.weight,
            leaves: left.0.leaves + right.0.leaves,
            node: Node::Pair(left, right),
        }))
    }

    pub fn heads() -> Self {
        Self::atom(Atom::Coin(Face::Heads))
    }

    pub fn tails() -> Self {
        Self::atom(Atom::Coin(Face::Tails))
    }

    pub fn record(label: &str) -> Self {
        Self::atom(Atom::Record(Arc::from(label)))
    }

    /// `r{i}`, the i-th record of the generated information states.
    pub fn indexed_record(i: usize) -> Self {
        Self::record(&format!("r{i}"))
    }

    pub fn boxed(base: CoinSet, level: u32) -> Self {
        Self::atom(Atom::Box { base, level })
    }

    /// `b_n = [{h,t}; n]`.
    pub fn basic_box(level: u32) -> Self {
        Self::boxed(CoinSet::basic(), level)
    }

    /// `s_n = h + (h + (... + h))`, right nested.
    pub fn stack(n: usize) -> Result<Self, TermError> {
        if n == 0 {
            return Err(TermError::EmptyStack);
        }
        let mut t = Self::heads();
        for _ in 1..n {
            t = Self::pair(Self::heads(), t);
        }
        Ok(t)
    }

    pub fn abstract_atom(atom: AbstractAtom) -> Result<Self, TermError> {
        if !atom.weight.value().is_positive() {
            return Err(TermError::NonPositiveWeight(atom.name));
        }
        if atom.mechanical && !atom.weight.is_one() {
            return Err(TermError::MechanicalWeight(atom.name));
        }
        Ok(Self::atom(Atom::Abstract(Arc::new(atom))))
    }

    pub fn as_atom(&self) -> Option<&Atom> {
        match &self.0.node {
            Node::Leaf(a) => Some(a),
            Node::Pair(..) => None,
        }
    }

    pub fn as_pair(&self) -> Option<(&Term, &Term)> {
        match &self.0.node {
            Node::Pair(l, r) => Some((l, r)),
            Node::Leaf(_) => None,
        }
    }

    pub fn leaves(&self) -> Vec<&Atom> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            match &t.0.node {
                Node::Leaf(a) => out.push(a),
                Node::Pair(l, r) => {
                    stack.push(r);
                    stack.push(l);
                }
            }
        }
        out
    }

    pub fn leaf_count(&self) -> usize {
        self.0.leaves
    }

    fn is_coin_term(&self) -> bool {
        self.leaves().iter().all(|a| matches!(a, Atom::Coin(_)))
    }

    /// Number of coins in the state when it is a pure right-nested heads stack.
    pub fn stack_height(&self) -> Option<usize> {
        match &self.0.node {
            Node::Leaf(Atom::Coin(Face::Heads)) => Some(1),
            Node::Pair(l, r) if l.as_atom() == Some(&Atom::Coin(Face::Heads)) => {
                r.stack_height().map(|n| n + 1)
            }
            _ => None,
        }
    }

    pub fn content(&self) -> ContentVector {
        self.0.content.clone()
    }

    pub fn content_ref(&self) -> &ContentVector {
        &self.0.content
    }

    pub fn weight(&self) -> Weight {
        self.0.weight.clone()
    }

    pub fn weight_ref(&self) -> &Weight {
        &self.0.weight
    }

    /// Every leaf is a record.
    pub fn is_record(&self) -> bool {
        self.leaves().iter().all(|a| matches!(a, Atom::Record(_)))
    }

    /// Every leaf is a coin or a mechanical abstract atom.
    pub fn is_mechanical(&self) -> bool {
        self.leaves().iter().all(|a| match a {
            Atom::Coin(_) => true,
            Atom::Abstract(x) => x.mechanical,
            _ => false,
        })
    }

    pub fn has_abstract(&self) -> bool {
        self.leaves().iter().any(|a| matches!(a, Atom::Abstract(_)))
    }
}

impl Atom {
    pub fn content(&self) -> ContentVector {
        match self {
            Atom::Coin(_) => ContentVector::coins(1),
            Atom::Record(_) => ContentVector::zero(),
            Atom::Box { base, level } => {
                ContentVector::coins((base.coin_value() * u64::from(*level)) as i64)
            }
            Atom::Abstract(a) => a.content.clone(),
        }
    }

    pub fn weight(&self) -> Weight {
        match self {
            Atom::Coin(_) | Atom::Record(_) => Weight::one(),
            Atom::Box { base, level } => {
                Weight(Rational::from_integer(BigInt::from(base.len()).pow(*level)))
            }
            Atom::Abstract(a) => a.weight.clone(),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.stack_height().filter(|&n| n > 1) {
            return write!(f, "s{n}");
        }
        match &self.0.node {
            Node::Leaf(a) => write!(f, "{a}"),
            Node::Pair(l, r) => write!(f, "({l}+{r})"),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Coin(Face::Heads) => f.write_str("h"),
            Atom::Coin(Face::Tails) => f.write_str("t"),
            Atom::Record(label) => f.write_str(label),
            Atom::Box { base, level } if base.is_basic() => write!(f, "b{level}"),
            Atom::Box { base, level } => {
                f.write_str("box[{")?;
                for (i, t) in base.elements().iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{t}")?;
                }
                write!(f, "}};{level}]")
            }
            Atom::Abstract(a) => write!(f, "@{}", a.name),
        }
    }
}

/// A finite nonempty content-uniform set of states.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Eidostate(BTreeSet<Term>);

impl Eidostate {
    pub fn new(states: impl IntoIterator<Item = Term>) -> Result<Self, TermError> {
        let set: BTreeSet<Term> = states.into_iter().collect();
        let mut iter = set.iter();
        let first = iter.next().ok_or(TermError::Empty)?;
        let q = first.content_ref();
        for t in iter {
            let c = t.content_ref();
            if c != q {
                return Err(TermError::NonUniform {
                    first: first.to_string(),
                    second: t.to_string(),
                    first_content: q.to_string(),
                    second_content: c.to_string(),
                });
            }
        }
        Ok(Self(set))
    }

    pub fn singleton(state: Term) -> Self {
        Self(BTreeSet::from([state]))
    }

    /// Caller guarantees nonempty and content-uniform.
    pub(crate) fn from_sorted_unchecked(set: BTreeSet<Term>) -> Self {
        debug_assert!(!set.is_empty());
        Self(set)
    }

    /// `I_k = {r0, ..., r(k-1)}`.
    pub fn information(k: usize) -> Result<Self, TermError> {
        Self::new((0..k).map(Term::indexed_record))
    }

    pub fn states(&self) -> &BTreeSet<Term> {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = &Term> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, t: &Term) -> bool {
        self.0.contains(t)
    }

    pub fn as_singleton(&self) -> Option<&Term> {
        (self.0.len() == 1).then(|| self.0.iter().next().expect("nonempty"))
    }

    pub fn content(&self) -> ContentVector {
        self.content_ref().clone()
    }

    pub fn content_ref(&self) -> &ContentVector {
        self.0.iter().next().expect("nonempty").content_ref()
    }

    /// `2^S(E) = Σ_e 2^S(e)`.
    pub fn weight(&self) -> Weight {
        Weight(self.0.iter().map(|t| t.weight_ref().value()).sum())
    }

    pub fn is_subset(&self, other: &Eidostate) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &Eidostate) -> bool {
        self.0.is_disjoint(&other.0)
    }

    /// Union of two eidostates; fails when contents differ.
    pub fn union(&self, other: &Eidostate) -> Result<Eidostate, TermError> {
        if self.content() != other.content() {
            return Eidostate::new(self.0.iter().chain(other.0.iter()).cloned());
        }
        let mut set = self.0.clone();
        set.extend(other.0.iter().cloned());
        Ok(Self(set))
    }

    /// Nonempty subsets only; `None` for an empty selection.
    pub fn subset_where(&self, mut keep: impl FnMut(&Term) -> bool) -> Option<Eidostate> {
        let set: BTreeSet<Term> = self.0.iter().filter(|t| keep(t)).cloned().collect();
        (!set.is_empty()).then_some(Self(set))
    }

    pub fn has_abstract(&self) -> bool {
        self.0.iter().any(Term::has_abstract)
    }

    pub fn is_information_state(&self) -> bool {
        self.0.iter().all(Term::is_record)
    }
}

impl fmt::Display for Eidostate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str("}")
    }
}

impl<'a> IntoIterator for &'a Eidostate {
    type Item = &'a Term;
    type IntoIter = std::collections::btree_set::Iter<'a, Term>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// `E + F`: the Cartesian product `{e + f}`.
pub fn combine(e: &Eidostate, f: &Eidostate) -> Eidostate {
    let mut set = BTreeSet::new();
    for a in e {
        for b in f {
            set.insert(Term::pair(a.clone(), b.clone()));
        }
    }
    Eidostate(set)
}

/// Prime Cartesian factors, sorted.
///
/// An eidostate splits when every element is a pair and the set equals the
/// product of its left and right projections; otherwise it is prime.
pub fn prime_factors(e: &Eidostate) -> Vec<Eidostate> {
    let mut out = Vec::new();
    collect_factors(e, &mut out);
    out.sort();
    out
}

fn collect_factors(e: &Eidostate, out: &mut Vec<Eidostate>) {
    match split(e) {
        Some((l, r)) => {
            collect_factors(&l, out);
            collect_factors(&r, out);
        }
        None => out.push(e.clone()),
    }
}

/// The top-level product decomposition `E = L + R`, if any.
pub fn split(e: &Eidostate) -> Option<(Eidostate, Eidostate)> {
    let mut left = BTreeSet::new();
    let mut right = BTreeSet::new();
    for t in e {
        let (l, r) = t.as_pair()?;
        left.insert(l.clone());
        right.insert(r.clone());
    }
    (left.len() * right.len() == e.len()).then_some((Eidostate(left), Eidostate(right)))
}

pub fn similar(a: &Eidostate, b: &Eidostate) -> bool {
    a == b || (a.len() == b.len() && prime_factors(a) == prime_factors(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn h() -> Term {
        Term::heads()
    }
    fn t() -> Term {
        Term::tails()
    }
    fn r(i: usize) -> Term {
        Term::indexed_record(i)
    }
    fn set(ts: &[Term]) -> Eidostate {
        Eidostate::new(ts.iter().cloned()).unwrap()
    }

    #[test]
    fn content_of_stacks_boxes_and_records() {
        assert_eq!(Term::stack(3).unwrap().content(), ContentVector::coins(3));
        assert_eq!(Term::basic_box(2).content(), ContentVector::coins(2));
        assert_eq!(Term::pair(r(0), h()).content(), ContentVector::coins(1));
    }

    #[test]
    fn weights_of_boxes() {
        assert_eq!(Term::basic_box(3).weight(), Weight::from_int(8));
        assert_eq!(Term::pair(h(), r(0)).weight(), Weight::one());
        let k = CoinSet::new([
            Term::pair(h(), h()),
            Term::pair(h(), t()),
            Term::pair(t(), h()),
        ])
        .unwrap();
        assert_eq!(Term::boxed(k, 2).weight(), Weight::from_int(9));
    }

    #[test]
    fn eido_weights_from_the_worked_examples() {
        assert_eq!(set(&[h(), t()]).weight(), Weight::from_int(2));
        let a = set(&[
            Term::pair(h(), Term::basic_box(1)),
            Term::pair(t(), Term::basic_box(1)),
            Term::pair(Term::pair(h(), t()), Term::basic_box(0)),
        ]);
        assert_eq!(a.weight(), Weight::from_int(5));
        for n in 0..6u32 {
            let m = 2usize;
            let b = set(&[
                Term::pair(Term::basic_box(n), Term::stack(m + 1).unwrap()),
                Term::pair(Term::basic_box(n + 1), Term::stack(m).unwrap()),
            ]);
            assert_eq!(b.weight(), Weight::from_int(3 << n));
        }
    }

    #[test]
    fn non_uniform_sets_are_rejected() {
        assert!(matches!(
            Eidostate::new([h(), Term::pair(h(), t())]),
            Err(TermError::NonUniform { .. })
        ));
        assert_eq!(Eidostate::new([]), Err(TermError::Empty));
        assert!(CoinSet::new([h(), Term::pair(h(), h())]).is_err());
        assert!(CoinSet::new([r(0)]).is_err());
    }

    #[test]
    fn combine_is_the_cartesian_product() {
        assert_eq!(
            combine(&set(&[h()]), &set(&[t()])),
            set(&[Term::pair(h(), t())])
        );
        let p = combine(&set(&[h(), t()]), &set(&[r(0), r(1)]));
        assert_eq!(p.len(), 4);
    }

    #[test]
    fn prime_factor_examples() {
        assert_eq!(
            prime_factors(&set(&[Term::pair(h(), t())])),
            vec![set(&[h()]), set(&[t()])]
        );
        let diag = set(&[Term::pair(h(), h()), Term::pair(t(), t())]);
        assert_eq!(prime_factors(&diag), vec![diag.clone()]);
        let p = combine(&set(&[h(), t()]), &set(&[r(0), r(1)]));
        let mut expected = vec![set(&[h(), t()]), set(&[r(0), r(1)])];
        expected.sort();
        assert_eq!(prime_factors(&p), expected);
    }

    #[test]
    fn similarity_examples() {
        let (a, b, c) = (h(), t(), r(0));
        let left = set(&[Term::pair(a.clone(), Term::pair(b.clone(), c.clone()))]);
        let right = set(&[Term::pair(Term::pair(a, b), c)]);
        assert!(similar(&left, &right));
        assert!(!similar(&set(&[h()]), &set(&[t()])));
        assert!(similar(&left, &left));
    }

    #[test]
    fn predicates() {
        assert!(Term::pair(r(0), r(1)).is_record());
        assert!(Term::stack(4).unwrap().is_mechanical());
        assert!(set(&[r(0), r(1)]).is_information_state());
        assert!(!Term::basic_box(1).is_mechanical());
        let demon = Term::abstract_atom(AbstractAtom {
            name: "m".into(),
            content: ContentVector::single("energy", int(1)),
            weight: Weight::one(),
            mechanical: true,
        })
        .unwrap();
        assert!(demon.is_mechanical());
    }

    #[test]
    fn mechanical_atoms_must_be_weightless() {
        let bad = AbstractAtom {
            name: "m".into(),
            content: ContentVector::zero(),
            weight: Weight::from_int(2),
            mechanical: true,
        };
        assert_eq!(
            Term::abstract_atom(bad),
            Err(TermError::MechanicalWeight("m".into()))
        );
    }

    #[test]
    fn pairing_is_neither_associative_nor_commutative() {
        let a = h();
        let left = Term::pair(a.clone(), Term::pair(a.clone(), a.clone()));
        let right = Term::pair(Term::pair(a.clone(), a.clone()), a);
        assert_ne!(left, right);
        assert_ne!(Term::pair(h(), t()), Term::pair(t(), h()));
    }

    #[test]
    fn display_uses_short_forms() {
        assert_eq!(Term::stack(3).unwrap().to_string(), "s3");
        assert_eq!(Term::stack(1).unwrap().to_string(), "h");
        assert_eq!(Term::basic_box(2).to_string(), "b2");
        assert_eq!(Term::pair(h(), r(1)).to_string(), "(h+r1)");
    }
}
