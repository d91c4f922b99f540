//! Frame-of-discernment algebra.
//!
//! A [`Frame`] is an ordered set of mutually exclusive answer options. Belief
//! over a frame is carried by a [`MassFunction`], a sparse map from subsets
//! (focal sets) to masses summing to one. This module provides the operators
//! the rest of the crate builds on: simple support construction, reliability
//! discounting, conjunctive and Yager combination, vacuous extension to a
//! product frame, the pignistic transform and argmax decisions.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported frame. Keeps exhaustive powerset iteration cheap.
pub const MAX_FRAME: usize = 20;

/// Masses below this threshold are dropped after every operation.
pub const PRUNE_EPS: f64 = 1e-12;

/// Tolerance on the sum-to-one check for mass functions.
pub const MASS_SUM_TOL: f64 = 1e-9;

/// Default tie tolerance for argmax decisions.
pub const DEFAULT_ARGMAX_TOL: f64 = 1e-9;

/// Ordered set of mutually exclusive, exhaustive elements.
///
/// Cloning is cheap; the label list is shared.
#[derive(Clone, Eq)]
pub struct Frame {
    labels: Arc<[String]>,
}

impl Frame {
    /// Builds a frame from distinct, non-empty labels. Element indices
    /// follow the given order and stay stable for the frame's lifetime.
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() || labels.len() > MAX_FRAME {
            return Err(Error::InvalidFrame(format!(
                "need between 1 and {MAX_FRAME} labels, got {}",
                labels.len()
            )));
        }
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::InvalidFrame(format!("label {i} is empty")));
            }
            if labels[..i].contains(label) {
                return Err(Error::InvalidFrame(format!("duplicate label \"{label}\"")));
            }
        }
        Ok(Frame {
            labels: labels.into(),
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn empty_set(&self) -> FocalSet {
        FocalSet::empty(self.len())
    }

    /// The full set, written Ω in the literature; carries total ignorance.
    pub fn full_set(&self) -> FocalSet {
        FocalSet::full(self.len())
    }

    pub fn singleton(&self, index: usize) -> Result<FocalSet> {
        FocalSet::from_indices(self.len(), [index])
    }

    /// Iterates over all 2^n subsets, the empty set first.
    pub fn subsets(&self) -> impl Iterator<Item = FocalSet> + '_ {
        let width = self.len();
        (0..(1u32 << width)).map(move |bits| FocalSet {
            width: width as u8,
            bits,
        })
    }

    /// Cartesian product frame with row-major element order: element
    /// `i * |right| + j` is the pair `(left_i, right_j)`.
    pub fn product(&self, right: &Frame) -> Result<Frame> {
        let size = self.len() * right.len();
        if size > MAX_FRAME {
            return Err(Error::FrameTooLarge {
                size,
                max: MAX_FRAME,
            });
        }
        let labels = self
            .labels
            .iter()
            .flat_map(|l| right.labels.iter().map(move |r| format!("({l},{r})")));
        Frame::new(labels)
    }

    /// Renders a focal set as its member labels joined by `;`.
    pub fn set_label(&self, set: &FocalSet) -> String {
        let mut out = String::new();
        for i in set.indices() {
            if !out.is_empty() {
                out.push(';');
            }
            out.push_str(self.label(i));
        }
        out
    }
}

impl PartialEq for Frame {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.labels, &other.labels) || self.labels == other.labels
    }
}

impl fmt::Debug for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Frame{:?}", self.labels)
    }
}

/// Subset of a frame, one bit per element.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FocalSet {
    width: u8,
    bits: u32,
}

impl FocalSet {
    pub fn empty(width: usize) -> Self {
        assert!(width <= MAX_FRAME);
        FocalSet {
            width: width as u8,
            bits: 0,
        }
    }

    pub fn full(width: usize) -> Self {
        assert!(width <= MAX_FRAME);
        FocalSet {
            width: width as u8,
            bits: if width == 0 { 0 } else { (1u32 << width) - 1 },
        }
    }

    pub fn from_indices<I>(width: usize, indices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = FocalSet::empty(width);
        for i in indices {
            if i >= width {
                return Err(Error::WidthMismatch {
                    width: i + 1,
                    frame: width,
                });
            }
            set.bits |= 1 << i;
        }
        Ok(set)
    }

    /// Builds a set from a raw bit mask over `width` elements.
    pub fn from_bits(width: usize, bits: u32) -> Result<Self> {
        let full = FocalSet::full(width);
        if bits & !full.bits != 0 {
            return Err(Error::WidthMismatch {
                width: (32 - bits.leading_zeros()) as usize,
                frame: width,
            });
        }
        Ok(FocalSet {
            width: width as u8,
            bits,
        })
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn width(&self) -> usize {
        self.width as usize
    }

    /// Number of member elements.
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        *self == FocalSet::full(self.width())
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.width() && self.bits & (1 << index) != 0
    }

    pub fn intersection(&self, other: &FocalSet) -> FocalSet {
        debug_assert_eq!(self.width, other.width);
        FocalSet {
            width: self.width,
            bits: self.bits & other.bits,
        }
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.width()).filter(move |i| self.contains(*i))
    }
}

impl fmt::Debug for FocalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for i in self.indices() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

/// Cylinder position used by [`MassFunction::vacuous_extend`]: whether the
/// extended frame becomes the left or the right factor of the product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Position {
    Left,
    Right,
}

/// Sparse mass function over the subsets of a frame.
///
/// Invariants: stored masses are strictly positive (tiny entries are pruned),
/// and they sum to one within [`MASS_SUM_TOL`]. Mass on the empty set is the
/// global conflict of a conjunctive combination; it only appears on that
/// operator's output, every other constructor yields `m(∅) = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct MassFunction {
    frame: Frame,
    masses: BTreeMap<FocalSet, f64>,
}

impl MassFunction {
    /// Validates and normalizes an explicit focal-set/mass list. Duplicate
    /// focal sets are accumulated.
    pub fn new<I>(frame: Frame, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (FocalSet, f64)>,
    {
        let mut masses: BTreeMap<FocalSet, f64> = BTreeMap::new();
        for (set, mass) in entries {
            if set.width() != frame.len() {
                return Err(Error::WidthMismatch {
                    width: set.width(),
                    frame: frame.len(),
                });
            }
            if mass < 0.0 || !mass.is_finite() {
                return Err(Error::NegativeMass { mass });
            }
            *masses.entry(set).or_insert(0.0) += mass;
        }
        Self::from_raw(frame, masses)
    }

    /// Total ignorance: all mass on Ω.
    pub fn vacuous(frame: &Frame) -> Self {
        let mut masses = BTreeMap::new();
        masses.insert(frame.full_set(), 1.0);
        MassFunction {
            frame: frame.clone(),
            masses,
        }
    }

    /// Simple support function: mass `w` on `focal`, the rest on Ω.
    /// `focal` must be neither the empty set nor the whole frame.
    pub fn simple_support(frame: &Frame, focal: FocalSet, w: f64) -> Result<Self> {
        if focal.width() != frame.len() {
            return Err(Error::WidthMismatch {
                width: focal.width(),
                frame: frame.len(),
            });
        }
        if focal.is_empty() || focal.is_full() {
            return Err(Error::InvalidSimpleSupport);
        }
        check_unit("support weight", w)?;
        MassFunction::new(frame.clone(), [(focal, w), (frame.full_set(), 1.0 - w)])
    }

    fn from_raw(frame: Frame, mut masses: BTreeMap<FocalSet, f64>) -> Result<Self> {
        let total: f64 = masses.values().sum();
        if !total.is_finite() || (total - 1.0).abs() > MASS_SUM_TOL {
            return Err(Error::NotNormalized { sum: total });
        }
        masses.retain(|_, m| *m >= PRUNE_EPS);
        if masses.is_empty() {
            return Err(Error::NotNormalized { sum: 0.0 });
        }
        let kept: f64 = masses.values().sum();
        if kept != total {
            for m in masses.values_mut() {
                *m /= kept;
            }
        }
        Ok(MassFunction { frame, masses })
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// Mass on a given subset; zero when the subset is not focal.
    pub fn mass(&self, set: &FocalSet) -> f64 {
        self.masses.get(set).copied().unwrap_or(0.0)
    }

    /// Mass on the empty set, i.e. the global conflict.
    pub fn conflict(&self) -> f64 {
        self.mass(&self.frame.empty_set())
    }

    /// True when no mass sits on the empty set.
    pub fn is_normalized(&self) -> bool {
        self.conflict() == 0.0
    }

    pub fn is_vacuous(&self) -> bool {
        self.masses.len() == 1 && self.masses.contains_key(&self.frame.full_set())
    }

    pub fn focal_count(&self) -> usize {
        self.masses.len()
    }

    /// Iterates over focal sets and their masses in stable (bit) order.
    pub fn iter(&self) -> impl Iterator<Item = (FocalSet, f64)> + '_ {
        self.masses.iter().map(|(s, m)| (*s, *m))
    }

    /// Reliability discounting: every non-Ω mass is scaled by `alpha`, the
    /// complement moves to Ω. `alpha = 0` yields the vacuous function,
    /// `alpha = 1` the identity.
    pub fn discount(&self, alpha: f64) -> Result<MassFunction> {
        check_unit("discount factor", alpha)?;
        if !self.is_normalized() {
            return Err(Error::UnnormalizedOperand);
        }
        let omega = self.frame.full_set();
        let mut out: BTreeMap<FocalSet, f64> = BTreeMap::new();
        for (set, mass) in self.iter() {
            if set != omega {
                out.insert(set, alpha * mass);
            }
        }
        // 1 - alpha*(1 - m(Ω)), written so alpha = 1 keeps m(Ω) bit-exact.
        out.insert(omega, (1.0 - alpha) + alpha * self.mass(&omega));
        Self::from_raw(self.frame.clone(), out)
    }

    /// Vacuous extension onto the product with `aux`: each focal set `A`
    /// becomes the cylinder `A x aux` (`Position::Left`) or `aux x A`
    /// (`Position::Right`) with its mass unchanged.
    pub fn vacuous_extend(&self, aux: &Frame, position: Position) -> Result<MassFunction> {
        if !self.is_normalized() {
            return Err(Error::UnnormalizedOperand);
        }
        let product = match position {
            Position::Left => self.frame.product(aux)?,
            Position::Right => aux.product(&self.frame)?,
        };
        let mut out = BTreeMap::new();
        for (set, mass) in self.iter() {
            let mut bits = 0u32;
            for a in set.indices() {
                for t in 0..aux.len() {
                    let index = match position {
                        Position::Left => a * aux.len() + t,
                        Position::Right => t * self.frame.len() + a,
                    };
                    bits |= 1 << index;
                }
            }
            out.insert(
                FocalSet::from_bits(product.len(), bits).expect("cylinder fits product frame"),
                mass,
            );
        }
        Self::from_raw(product, out)
    }

    /// Pignistic transform: each focal mass is split equally among its
    /// members, after renormalizing by `1 - m(∅)`.
    pub fn pignistic(&self) -> Result<PignisticDistribution> {
        let denom = 1.0 - self.conflict();
        if denom <= PRUNE_EPS {
            return Err(Error::UndefinedTransform);
        }
        let n = self.frame.len();
        let mut probs = vec![0.0; n];
        for (i, p) in probs.iter_mut().enumerate() {
            for (set, mass) in self.iter() {
                if set.contains(i) {
                    *p += mass / (set.len() as f64 * denom);
                }
            }
        }
        Ok(PignisticDistribution {
            frame: self.frame.clone(),
            probs,
        })
    }
}

/// Probability distribution over frame elements, for decision making.
#[derive(Clone, Debug, PartialEq)]
pub struct PignisticDistribution {
    frame: Frame,
    probs: Vec<f64>,
}

impl PignisticDistribution {
    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn prob(&self, index: usize) -> f64 {
        self.probs[index]
    }

    /// All elements whose probability is within `tol` of the maximum.
    /// Ties are returned as a set, never broken arbitrarily.
    pub fn argmax(&self, tol: f64) -> FocalSet {
        let tol = tol.max(0.0);
        let max = self.probs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let indices = (0..self.probs.len()).filter(|&i| self.probs[i] >= max - tol);
        FocalSet::from_indices(self.frame.len(), indices).expect("indices from own frame")
    }
}

fn check_unit(what: &'static str, value: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&value) || value.is_nan() {
        return Err(Error::OutOfRange {
            what,
            lo: 0.0,
            hi: 1.0,
            value,
        });
    }
    Ok(())
}

fn check_sources(sources: &[MassFunction]) -> Result<&Frame> {
    let first = sources.first().ok_or(Error::EmptyCombination)?;
    for m in sources {
        if m.frame() != first.frame() {
            return Err(Error::FrameMismatch);
        }
        if !m.is_normalized() {
            return Err(Error::UnnormalizedOperand);
        }
    }
    Ok(first.frame())
}

/// Conjunctive combination of independent sources on one frame: the mass of
/// each subset is the sum, over tuples of focal sets intersecting to it, of
/// the product of masses. The output may carry mass on the empty set; that
/// mass is the global conflict of the combination.
pub fn combine_conjunctive(sources: &[MassFunction]) -> Result<MassFunction> {
    let frame = check_sources(sources)?.clone();
    let mut acc: BTreeMap<FocalSet, f64> = sources[0].masses.clone();
    for source in &sources[1..] {
        let mut next: BTreeMap<FocalSet, f64> = BTreeMap::new();
        for (a, ma) in &acc {
            for (b, mb) in source.iter() {
                *next.entry(a.intersection(&b)).or_insert(0.0) += ma * mb;
            }
        }
        acc = next;
    }
    MassFunction::from_raw(frame, acc)
}

/// Yager's rule: conjunctive combination with the global conflict moved onto
/// Ω as total ignorance. Applied once over the whole n-ary combination, not
/// pairwise, because the conflict reallocation is not associative.
pub fn combine_yager(sources: &[MassFunction]) -> Result<MassFunction> {
    let conjunctive = combine_conjunctive(sources)?;
    let empty = conjunctive.frame.empty_set();
    let omega = conjunctive.frame.full_set();
    let mut masses = conjunctive.masses;
    if let Some(conflict) = masses.remove(&empty) {
        *masses.entry(omega).or_insert(0.0) += conflict;
    }
    MassFunction::from_raw(conjunctive.frame, masses)
}

/// Pointwise arithmetic mean of mass functions on one frame.
pub fn mean_mass(sources: &[MassFunction]) -> Result<MassFunction> {
    let frame = check_sources(sources)?.clone();
    let n = sources.len() as f64;
    let mut acc: BTreeMap<FocalSet, f64> = BTreeMap::new();
    for source in sources {
        for (set, mass) in source.iter() {
            *acc.entry(set).or_insert(0.0) += mass;
        }
    }
    for mass in acc.values_mut() {
        *mass /= n;
    }
    MassFunction::from_raw(frame, acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame(n: usize) -> Frame {
        Frame::new((0..n).map(|i| format!("e{i}"))).unwrap()
    }

    fn set(width: usize, indices: &[usize]) -> FocalSet {
        FocalSet::from_indices(width, indices.iter().copied()).unwrap()
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-12
    }

    #[test]
    fn frame_rejects_duplicates_and_empty_labels() {
        assert!(Frame::new(["a", "a"]).is_err());
        assert!(Frame::new(["a", ""]).is_err());
        assert!(Frame::new(Vec::<String>::new()).is_err());
        assert!(Frame::new((0..21).map(|i| i.to_string())).is_err());
    }

    #[test]
    fn simple_support_basic() {
        let f = frame(5);
        let m = MassFunction::simple_support(&f, set(5, &[3]), 0.75).unwrap();
        assert_eq!(m.mass(&set(5, &[3])), 0.75);
        assert_eq!(m.mass(&f.full_set()), 0.25);
        assert_eq!(m.focal_count(), 2);
    }

    #[test]
    fn simple_support_zero_weight_is_vacuous() {
        let f = frame(4);
        let m = MassFunction::simple_support(&f, set(4, &[1]), 0.0).unwrap();
        assert!(m.is_vacuous());
        assert_eq!(m.mass(&f.full_set()), 1.0);
    }

    #[test]
    fn simple_support_pair_on_three() {
        let f = frame(3);
        let m = MassFunction::simple_support(&f, set(3, &[0, 1]), 0.5).unwrap();
        assert_eq!(m.mass(&set(3, &[0, 1])), 0.5);
        assert_eq!(m.mass(&f.full_set()), 0.5);
    }

    #[test]
    fn simple_support_rejects_empty_and_full() {
        let f = frame(3);
        assert!(matches!(
            MassFunction::simple_support(&f, f.empty_set(), 0.5),
            Err(Error::InvalidSimpleSupport)
        ));
        assert!(matches!(
            MassFunction::simple_support(&f, f.full_set(), 0.5),
            Err(Error::InvalidSimpleSupport)
        ));
        assert!(MassFunction::simple_support(&f, set(3, &[0]), 1.5).is_err());
    }

    #[test]
    fn mass_function_rejects_bad_sum_and_negative() {
        let f = frame(2);
        assert!(matches!(
            MassFunction::new(f.clone(), [(set(2, &[0]), 0.5)]),
            Err(Error::NotNormalized { .. })
        ));
        assert!(matches!(
            MassFunction::new(f, [(set(2, &[0]), -0.5), (set(2, &[1]), 1.5)]),
            Err(Error::NegativeMass { .. })
        ));
    }

    #[test]
    fn discount_identity_and_vacuous() {
        let f = frame(3);
        let m = MassFunction::new(
            f.clone(),
            [
                (set(3, &[0]), 0.1),
                (set(3, &[1, 2]), 0.3),
                (f.full_set(), 0.6),
            ],
        )
        .unwrap();
        assert_eq!(m.discount(1.0).unwrap(), m);
        assert!(m.discount(0.0).unwrap().is_vacuous());
        assert!(m.discount(1.1).is_err());
        assert!(m.discount(-0.1).is_err());
    }

    #[test]
    fn discount_scales_non_omega_mass() {
        let f = frame(2);
        let m = MassFunction::new(f.clone(), [(set(2, &[0]), 0.5), (f.full_set(), 0.5)]).unwrap();
        let d = m.discount(0.8).unwrap();
        assert!(close(d.mass(&set(2, &[0])), 0.4));
        assert!(close(d.mass(&f.full_set()), 0.6));
    }

    #[test]
    fn conjunctive_single_input_unchanged() {
        let f = frame(3);
        let m = MassFunction::simple_support(&f, set(3, &[1]), 0.7).unwrap();
        assert_eq!(combine_conjunctive(std::slice::from_ref(&m)).unwrap(), m);
    }

    #[test]
    fn conjunctive_total_conflict() {
        let f = frame(2);
        let a = MassFunction::new(f.clone(), [(set(2, &[0]), 1.0)]).unwrap();
        let b = MassFunction::new(f.clone(), [(set(2, &[1]), 1.0)]).unwrap();
        let c = combine_conjunctive(&[a, b]).unwrap();
        assert_eq!(c.conflict(), 1.0);
        assert_eq!(c.focal_count(), 1);
    }

    #[test]
    fn conjunctive_concordant_pair() {
        let f = frame(3);
        let a = MassFunction::simple_support(&f, set(3, &[0]), 0.6).unwrap();
        let b = MassFunction::simple_support(&f, set(3, &[0]), 0.5).unwrap();
        let c = combine_conjunctive(&[a, b]).unwrap();
        assert!(close(c.mass(&set(3, &[0])), 0.8));
        assert!(close(c.mass(&f.full_set()), 0.2));
    }

    #[test]
    fn conjunctive_rejects_mixed_frames_and_empty_input() {
        let a = MassFunction::vacuous(&frame(2));
        let b = MassFunction::vacuous(&frame(3));
        assert!(matches!(
            combine_conjunctive(&[a, b]),
            Err(Error::FrameMismatch)
        ));
        assert!(matches!(
            combine_conjunctive(&[]),
            Err(Error::EmptyCombination)
        ));
    }

    #[test]
    fn yager_reallocates_total_conflict_to_omega() {
        let f = frame(2);
        let a = MassFunction::new(f.clone(), [(set(2, &[0]), 1.0)]).unwrap();
        let b = MassFunction::new(f.clone(), [(set(2, &[1]), 1.0)]).unwrap();
        let y = combine_yager(&[a, b]).unwrap();
        assert!(y.is_vacuous());
    }

    #[test]
    fn yager_vacuous_is_neutral() {
        let f = frame(4);
        let m = MassFunction::simple_support(&f, set(4, &[2]), 0.55).unwrap();
        let y = combine_yager(&[m.clone(), MassFunction::vacuous(&f)]).unwrap();
        assert_eq!(y, m);
    }

    #[test]
    fn yager_partial_conflict() {
        let f = frame(2);
        let a = MassFunction::simple_support(&f, set(2, &[0]), 0.7).unwrap();
        let b = MassFunction::simple_support(&f, set(2, &[1]), 0.6).unwrap();
        let y = combine_yager(&[a, b]).unwrap();
        assert!(close(y.mass(&set(2, &[0])), 0.28));
        assert!(close(y.mass(&set(2, &[1])), 0.18));
        assert!(close(y.mass(&f.full_set()), 0.54));
        assert!(y.is_normalized());
    }

    #[test]
    fn vacuous_extend_left() {
        let omega2 = Frame::new(["P", "NP"]).unwrap();
        let omega3 = Frame::new(["R", "NR"]).unwrap();
        let m = MassFunction::simple_support(&omega2, set(2, &[0]), 0.8).unwrap();
        let up = m.vacuous_extend(&omega3, Position::Left).unwrap();
        assert_eq!(up.frame().labels()[0], "(P,R)");
        // {P} x Ω3 = {(P,R),(P,NR)}
        assert!(close(up.mass(&set(4, &[0, 1])), 0.8));
        assert!(close(up.mass(&up.frame().full_set()), 0.2));
    }

    #[test]
    fn vacuous_extend_right() {
        let omega2 = Frame::new(["P", "NP"]).unwrap();
        let omega3 = Frame::new(["R", "NR"]).unwrap();
        let m = MassFunction::simple_support(&omega3, set(2, &[1]), 0.6).unwrap();
        let up = m.vacuous_extend(&omega2, Position::Right).unwrap();
        // Ω2 x {NR} = {(P,NR),(NP,NR)}
        assert!(close(up.mass(&set(4, &[1, 3])), 0.6));
        assert!(close(up.mass(&up.frame().full_set()), 0.4));
    }

    #[test]
    fn vacuous_extend_of_vacuous_stays_vacuous() {
        let f = frame(3);
        let aux = frame(4);
        let up = MassFunction::vacuous(&f)
            .vacuous_extend(&aux, Position::Left)
            .unwrap();
        assert!(up.is_vacuous());
        assert_eq!(up.frame().len(), 12);
    }

    #[test]
    fn vacuous_extend_capacity_error() {
        let f = frame(5);
        let aux = frame(5);
        assert!(matches!(
            MassFunction::vacuous(&f).vacuous_extend(&aux, Position::Left),
            Err(Error::FrameTooLarge { size: 25, .. })
        ));
    }

    #[test]
    fn pignistic_of_vacuous_is_uniform() {
        let f = frame(5);
        let p = MassFunction::vacuous(&f).pignistic().unwrap();
        for i in 0..5 {
            assert_eq!(p.prob(i), 0.2);
        }
    }

    #[test]
    fn pignistic_splits_focal_mass() {
        let f = frame(2);
        let m = MassFunction::new(f.clone(), [(set(2, &[0]), 0.6), (f.full_set(), 0.4)]).unwrap();
        let p = m.pignistic().unwrap();
        assert!(close(p.prob(0), 0.8));
        assert!(close(p.prob(1), 0.2));
    }

    #[test]
    fn pignistic_renormalizes_conflict() {
        let f = frame(2);
        // ({e0}:1) combined with ({e1}:0.8, Ω:0.2) leaves ∅:0.8, {e0}:0.2
        let categorical = MassFunction::new(f.clone(), [(set(2, &[0]), 1.0)]).unwrap();
        let opposed = MassFunction::simple_support(&f, set(2, &[1]), 0.8).unwrap();
        let c = combine_conjunctive(&[categorical, opposed]).unwrap();
        assert!(close(c.conflict(), 0.8));
        let p = c.pignistic().unwrap();
        assert!(close(p.prob(0), 1.0));
        assert!(close(p.prob(1), 0.0));
    }

    #[test]
    fn pignistic_undefined_on_pure_conflict() {
        let f = frame(2);
        let a = MassFunction::new(f.clone(), [(set(2, &[0]), 1.0)]).unwrap();
        let b = MassFunction::new(f.clone(), [(set(2, &[1]), 1.0)]).unwrap();
        let c = combine_conjunctive(&[a, b]).unwrap();
        assert!(matches!(c.pignistic(), Err(Error::UndefinedTransform)));
    }

    #[test]
    fn argmax_unique_and_ties() {
        let f = frame(2);
        let m = MassFunction::new(f.clone(), [(set(2, &[0]), 0.7), (set(2, &[1]), 0.3)]).unwrap();
        let p = m.pignistic().unwrap();
        assert_eq!(p.argmax(DEFAULT_ARGMAX_TOL), set(2, &[0]));

        let uniform = MassFunction::vacuous(&frame(4)).pignistic().unwrap();
        assert_eq!(uniform.argmax(DEFAULT_ARGMAX_TOL), FocalSet::full(4));
    }

    #[test]
    fn argmax_tolerance_groups_near_ties() {
        let f = frame(3);
        let m = MassFunction::new(
            f,
            [
                (set(3, &[0]), 0.5),
                (set(3, &[1]), 0.5 - 1e-12),
                (set(3, &[2]), 1e-12),
            ],
        )
        .unwrap();
        let p = m.pignistic().unwrap();
        assert_eq!(p.argmax(1e-9), set(3, &[0, 1]));
    }

    #[test]
    fn mean_mass_examples() {
        let f = frame(2);
        let a = MassFunction::new(f.clone(), [(set(2, &[0]), 1.0)]).unwrap();
        let b = MassFunction::new(f.clone(), [(set(2, &[1]), 1.0)]).unwrap();
        let m = mean_mass(&[a.clone(), b]).unwrap();
        assert!(close(m.mass(&set(2, &[0])), 0.5));
        assert!(close(m.mass(&set(2, &[1])), 0.5));

        assert_eq!(mean_mass(std::slice::from_ref(&a)).unwrap(), a);

        let c = MassFunction::simple_support(&f, set(2, &[0]), 0.8).unwrap();
        let m2 = mean_mass(&[c, MassFunction::vacuous(&f)]).unwrap();
        assert!(close(m2.mass(&set(2, &[0])), 0.4));
        assert!(close(m2.mass(&f.full_set()), 0.6));

        assert!(matches!(mean_mass(&[]), Err(Error::EmptyCombination)));
    }

    #[test]
    fn product_frame_labels_row_major() {
        let left = Frame::new(["P", "NP"]).unwrap();
        let right = Frame::new(["R", "NR"]).unwrap();
        let product = left.product(&right).unwrap();
        assert_eq!(product.labels(), ["(P,R)", "(P,NR)", "(NP,R)", "(NP,NR)"]);
    }

    #[test]
    fn subsets_enumerate_the_whole_powerset() {
        let f = frame(3);
        let subsets: Vec<FocalSet> = f.subsets().collect();
        assert_eq!(subsets.len(), 8);
        assert_eq!(subsets[0], f.empty_set());
        assert_eq!(subsets[7], f.full_set());
        assert_eq!(f.set_label(&subsets[5]), "e0;e2");
    }
}
