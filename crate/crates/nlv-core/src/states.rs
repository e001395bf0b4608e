//! Multipartite kets and orthogonal state sets.
//!
//! Amplitudes are stored unnormalized: norms are irrational in general and
//! every formula downstream (orthogonality constraints, Schmidt rank,
//! branch-probability ratios) is homogeneous in the state or uses ratios.
//! Party labels are 0-based internally; mixed-radix index arithmetic puts
//! party 0 most significant.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::exactmath::{format_rational, GaussianRational, Rational, RationalMatrix};
use crate::partitions::Grouping;

/// Ordered list of party dimensions `d_1..d_n`, each at least 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionProfile {
    dims: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StateError {
    EmptyProfile,
    PartyDimensionTooSmall { party: usize, dim: usize },
    FactorCountMismatch { expected: usize, got: usize },
    FactorLengthMismatch { party: usize, expected: usize, got: usize },
    AmplitudeLengthMismatch { expected: usize, got: usize },
    ZeroFactor { party: usize },
    ZeroKet,
    ProfileMismatch,
    LabelOutOfRange { party: usize, label: usize },
    PartyOutOfRange { party: usize },
}

impl fmt::Display for StateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StateError::EmptyProfile => write!(f, "profile needs at least one party"),
            StateError::PartyDimensionTooSmall { party, dim } => {
                write!(f, "party {party} has dimension {dim}, minimum is 2")
            }
            StateError::FactorCountMismatch { expected, got } => {
                write!(f, "expected {expected} tensor factors, got {got}")
            }
            StateError::FactorLengthMismatch { party, expected, got } => {
                write!(f, "factor for party {party} has length {got}, expected {expected}")
            }
            StateError::AmplitudeLengthMismatch { expected, got } => {
                write!(f, "amplitude vector has length {got}, expected {expected}")
            }
            StateError::ZeroFactor { party } => write!(f, "factor for party {party} is zero"),
            StateError::ZeroKet => write!(f, "ket has no nonzero amplitude"),
            StateError::ProfileMismatch => write!(f, "dimension profiles differ"),
            StateError::LabelOutOfRange { party, label } => {
                write!(f, "label {label} out of range for party {party}")
            }
            StateError::PartyOutOfRange { party } => write!(f, "party index {party} out of range"),
        }
    }
}

impl DimensionProfile {
    pub fn new(dims: Vec<usize>) -> Result<Self, StateError> {
        if dims.is_empty() {
            return Err(StateError::EmptyProfile);
        }
        for (party, &dim) in dims.iter().enumerate() {
            if dim < 2 {
                return Err(StateError::PartyDimensionTooSmall { party, dim });
            }
        }
        Ok(DimensionProfile { dims })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn party_count(&self) -> usize {
        self.dims.len()
    }

    pub fn dim_of(&self, party: usize) -> usize {
        self.dims[party]
    }

    /// Total dimension D = product of the party dimensions.
    pub fn total_dim(&self) -> usize {
        self.dims.iter().product()
    }

    /// Global index of local labels under the fixed mixed-radix convention
    /// (party 0 most significant).
    pub fn global_index(&self, labels: &[usize]) -> Result<usize, StateError> {
        if labels.len() != self.dims.len() {
            return Err(StateError::FactorCountMismatch {
                expected: self.dims.len(),
                got: labels.len(),
            });
        }
        let mut g = 0usize;
        for (party, (&d, &k)) in self.dims.iter().zip(labels).enumerate() {
            if k >= d {
                return Err(StateError::LabelOutOfRange { party, label: k });
            }
            g = g * d + k;
        }
        Ok(g)
    }

    /// Inverse of `global_index`.
    pub fn labels_of(&self, mut global: usize) -> Vec<usize> {
        let mut labels = vec![0usize; self.dims.len()];
        for (slot, &d) in labels.iter_mut().zip(&self.dims).rev() {
            *slot = global % d;
            global /= d;
        }
        labels
    }
}

/// An unnormalized ket over a tensor-product space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ket {
    profile: DimensionProfile,
    amplitudes: Vec<GaussianRational>,
    pub label: Option<String>,
}

impl Ket {
    pub fn new(profile: DimensionProfile, amplitudes: Vec<GaussianRational>) -> Result<Self, StateError> {
        if amplitudes.len() != profile.total_dim() {
            return Err(StateError::AmplitudeLengthMismatch {
                expected: profile.total_dim(),
                got: amplitudes.len(),
            });
        }
        if amplitudes.iter().all(GaussianRational::is_zero) {
            return Err(StateError::ZeroKet);
        }
        Ok(Ket {
            profile,
            amplitudes,
            label: None,
        })
    }

    pub fn from_terms(
        profile: DimensionProfile,
        terms: &[(&[usize], GaussianRational)],
    ) -> Result<Self, StateError> {
        let mut amplitudes = vec![GaussianRational::zero(); profile.total_dim()];
        for (labels, value) in terms {
            let g = profile.global_index(labels)?;
            amplitudes[g] = value.clone();
        }
        Ket::new(profile, amplitudes)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn profile(&self) -> &DimensionProfile {
        &self.profile
    }

    pub fn amplitudes(&self) -> &[GaussianRational] {
        &self.amplitudes
    }

    pub fn amplitude(&self, global: usize) -> &GaussianRational {
        &self.amplitudes[global]
    }

    /// Squared norm, a positive rational for any valid ket.
    pub fn norm_sqr(&self) -> Rational {
        self.amplitudes
            .iter()
            .fold(Rational::zero(), |acc, a| acc + a.norm_sqr())
    }

    /// True when `other = c * self` for some nonzero scalar c.
    pub fn proportional_to(&self, other: &Ket) -> bool {
        if self.profile != other.profile {
            return false;
        }
        let Some(pivot) = self.amplitudes.iter().position(|a| !a.is_zero()) else {
            return false;
        };
        if other.amplitudes[pivot].is_zero() {
            return false;
        }
        // cross-multiply: self[i] * other[pivot] == other[i] * self[pivot]
        let a0 = &self.amplitudes[pivot];
        let b0 = &other.amplitudes[pivot];
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .all(|(a, b)| &(a * b0) == &(b * a0))
    }
}

/// Exact sesquilinear inner product, conjugate-linear in the first argument.
pub fn inner_product(a: &Ket, b: &Ket) -> Result<GaussianRational, StateError> {
    if a.profile != b.profile {
        return Err(StateError::ProfileMismatch);
    }
    let mut acc = GaussianRational::zero();
    for (x, y) in a.amplitudes.iter().zip(&b.amplitudes) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(&x.conj() * y);
        }
    }
    Ok(acc)
}

/// Tensor product of per-party amplitude vectors under the fixed
/// mixed-radix indexing.
pub fn product_ket(
    profile: DimensionProfile,
    factors: &[Vec<GaussianRational>],
) -> Result<Ket, StateError> {
    if factors.len() != profile.party_count() {
        return Err(StateError::FactorCountMismatch {
            expected: profile.party_count(),
            got: factors.len(),
        });
    }
    for (party, (factor, &d)) in factors.iter().zip(profile.dims()).enumerate() {
        if factor.len() != d {
            return Err(StateError::FactorLengthMismatch {
                party,
                expected: d,
                got: factor.len(),
            });
        }
        if factor.iter().all(GaussianRational::is_zero) {
            return Err(StateError::ZeroFactor { party });
        }
    }
    let mut amps = vec![GaussianRational::one()];
    for factor in factors {
        let mut next = Vec::with_capacity(amps.len() * factor.len());
        for a in &amps {
            for c in factor {
                next.push(a * c);
            }
        }
        amps = next;
    }
    Ket::new(profile, amps)
}

/// One entry of a validation failure report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    ProfileMismatch { state: usize },
    ZeroState { state: usize },
    Duplicate { first: usize, second: usize },
    NonOrthogonalPair {
        first: usize,
        second: usize,
        inner: GaussianRational,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ProfileMismatch { state } => {
                write!(f, "state {state} does not match the set profile")
            }
            Violation::ZeroState { state } => write!(f, "state {state} is the zero vector"),
            Violation::Duplicate { first, second } => {
                write!(f, "states {first} and {second} are proportional")
            }
            Violation::NonOrthogonalPair { first, second, inner } => {
                write!(f, "states {first} and {second} have inner product {inner}")
            }
        }
    }
}

/// Full list of constraint violations found while validating a raw set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "state set validation failed:")?;
        for v in &self.violations {
            write!(f, "\n  - {v}")?;
        }
        Ok(())
    }
}

/// A validated list of pairwise-orthogonal kets sharing one profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateSet {
    profile: DimensionProfile,
    states: Vec<Ket>,
    pub name: Option<String>,
}

impl StateSet {
    pub fn profile(&self) -> &DimensionProfile {
        &self.profile
    }

    pub fn states(&self) -> &[Ket] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn state(&self, i: usize) -> &Ket {
        &self.states[i]
    }

    /// True when the set is a complete basis of its space.
    pub fn is_complete_basis(&self) -> bool {
        self.states.len() == self.profile.total_dim()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Restriction to the first `k` states (still a valid orthogonal set).
    pub fn truncated(&self, k: usize) -> StateSet {
        StateSet {
            profile: self.profile.clone(),
            states: self.states[..k].to_vec(),
            name: None,
        }
    }

    /// Constructor for internal transforms that provably preserve the set
    /// invariants (coarse-graining and relabelings are amplitude
    /// permutations).
    pub(crate) fn from_validated_parts(
        profile: DimensionProfile,
        states: Vec<Ket>,
        name: Option<String>,
    ) -> StateSet {
        StateSet { profile, states, name }
    }
}

/// Validates pairwise exact orthogonality, rejects zero vectors and
/// proportional duplicates, and returns either the set or every offence.
pub fn validate_state_set(
    profile: DimensionProfile,
    states: Vec<Ket>,
) -> Result<StateSet, ValidationReport> {
    let mut violations = Vec::new();
    for (i, ket) in states.iter().enumerate() {
        if ket.profile() != &profile {
            violations.push(Violation::ProfileMismatch { state: i });
        }
        if ket.amplitudes.iter().all(GaussianRational::is_zero) {
            violations.push(Violation::ZeroState { state: i });
        }
    }
    if violations.is_empty() {
        for i in 0..states.len() {
            for j in (i + 1)..states.len() {
                if states[i].proportional_to(&states[j]) {
                    violations.push(Violation::Duplicate { first: i, second: j });
                    continue;
                }
                let ip = inner_product(&states[i], &states[j]).expect("profiles checked");
                if !ip.is_zero() {
                    violations.push(Violation::NonOrthogonalPair {
                        first: i,
                        second: j,
                        inner: ip,
                    });
                }
            }
        }
    }
    if violations.is_empty() {
        Ok(StateSet {
            profile,
            states,
            name: None,
        })
    } else {
        Err(ValidationReport { violations })
    }
}

/// Exact Schmidt rank of a state across a bipartition: the rank of the
/// amplitude vector reshaped into a (D_left x D_right) matrix. Rank 1 means
/// the state is a product across the cut.
pub fn schmidt_rank_across(state: &Ket, grouping: &Grouping) -> Result<usize, StateError> {
    let profile = state.profile();
    if !grouping.is_bipartition() || grouping.party_count() != profile.party_count() {
        return Err(StateError::ProfileMismatch);
    }
    let left = grouping.block(0);
    let right = grouping.block(1);
    let dim_of = |block: &[usize]| -> usize { block.iter().map(|&p| profile.dim_of(p)).product() };
    let (rows, cols) = (dim_of(left), dim_of(right));
    // Split by real/imaginary parts stacked side by side: over the rationals
    // the rank of [Re | Im] reshaped... the Schmidt rank over the complex
    // field equals the rank of the complex matrix; for Gaussian-rational
    // entries we compute it exactly by doubling rows: [Re; Im] stacked as
    // [[Re, -Im], [Im, Re]] has twice the complex rank.
    let mut real = RationalMatrix::zeros(rows, cols);
    let mut imag = RationalMatrix::zeros(rows, cols);
    let mut any_imag = false;
    for (g, amp) in state.amplitudes().iter().enumerate() {
        if amp.is_zero() {
            continue;
        }
        let labels = profile.labels_of(g);
        let row = block_label(left, &labels, profile);
        let col = block_label(right, &labels, profile);
        *real.at_mut(row, col) = amp.re.clone();
        *imag.at_mut(row, col) = amp.im.clone();
        any_imag |= !amp.im.is_zero();
    }
    if !any_imag {
        return Ok(real.rank());
    }
    let mut doubled = RationalMatrix::zeros(2 * rows, 2 * cols);
    for r in 0..rows {
        for c in 0..cols {
            *doubled.at_mut(r, c) = real.at(r, c).clone();
            *doubled.at_mut(r, c + cols) = -imag.at(r, c).clone();
            *doubled.at_mut(r + rows, c) = imag.at(r, c).clone();
            *doubled.at_mut(r + rows, c + cols) = real.at(r, c).clone();
        }
    }
    Ok(doubled.rank() / 2)
}

/// Mixed-radix label of one block of parties, members in ascending order.
pub(crate) fn block_label(block: &[usize], labels: &[usize], profile: &DimensionProfile) -> usize {
    let mut m = 0usize;
    for &p in block {
        m = m * profile.dim_of(p) + labels[p];
    }
    m
}

/// Relabels tensor factors: new party `p` carries what old party `perm[p]`
/// carried. `perm` must be a permutation of `0..n`.
pub fn permute_parties(set: &StateSet, perm: &[usize]) -> StateSet {
    let n = set.profile().party_count();
    assert_eq!(perm.len(), n);
    let new_dims: Vec<usize> = perm.iter().map(|&p| set.profile().dim_of(p)).collect();
    let new_profile = DimensionProfile::new(new_dims).expect("permutation keeps dims");
    let states = set
        .states()
        .iter()
        .map(|ket| {
            let mut amps = vec![GaussianRational::zero(); new_profile.total_dim()];
            for (g, a) in ket.amplitudes().iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let labels = set.profile().labels_of(g);
                let new_labels: Vec<usize> = perm.iter().map(|&p| labels[p]).collect();
                let ng = new_profile.global_index(&new_labels).expect("in range");
                amps[ng] = a.clone();
            }
            Ket::new(new_profile.clone(), amps).expect("permutation keeps nonzero")
        })
        .collect();
    StateSet {
        profile: new_profile,
        states,
        name: None,
    }
}

/// Relabels the computational basis of one party: new label `k` carries what
/// old label `perm[k]` carried.
pub fn permute_party_basis(set: &StateSet, party: usize, perm: &[usize]) -> StateSet {
    let profile = set.profile().clone();
    assert_eq!(perm.len(), profile.dim_of(party));
    let states = set
        .states()
        .iter()
        .map(|ket| {
            let mut amps = vec![GaussianRational::zero(); profile.total_dim()];
            for (g, a) in ket.amplitudes().iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let mut labels = profile.labels_of(g);
                let old = labels[party];
                let new = perm.iter().position(|&p| p == old).expect("permutation");
                labels[party] = new;
                let ng = profile.global_index(&labels).expect("in range");
                amps[ng] = a.clone();
            }
            Ket::new(profile.clone(), amps).expect("permutation keeps nonzero")
        })
        .collect();
    StateSet {
        profile,
        states,
        name: None,
    }
}

/// True when the two sets contain the same states up to reordering and
/// per-state scalar factors.
pub fn sets_equivalent(a: &StateSet, b: &StateSet) -> bool {
    if a.profile() != b.profile() || a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    for ka in a.states() {
        let mut found = false;
        for (j, kb) in b.states().iter().enumerate() {
            if !used[j] && ka.proportional_to(kb) {
                used[j] = true;
                found = true;
                break;
            }
        }
        if !found {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// display notation

/// Try to factor a ket into per-party vectors; `None` when entangled.
fn factorize(ket: &Ket) -> Option<Vec<Vec<GaussianRational>>> {
    let profile = ket.profile();
    let mut rest: Vec<GaussianRational> = ket.amplitudes().to_vec();
    let mut rest_dim = profile.total_dim();
    let mut factors = Vec::new();
    for &d in profile.dims() {
        rest_dim /= d;
        // rest viewed as d x rest_dim; all rows must be proportional
        let pivot_row = (0..d).find(|&r| {
            rest[r * rest_dim..(r + 1) * rest_dim]
                .iter()
                .any(|a| !a.is_zero())
        })?;
        let pivot_col = (0..rest_dim)
            .find(|&c| !rest[pivot_row * rest_dim + c].is_zero())
            .expect("nonzero row");
        let pivot = rest[pivot_row * rest_dim + pivot_col].clone();
        let mut factor = Vec::with_capacity(d);
        for r in 0..d {
            factor.push(rest[r * rest_dim + pivot_col].clone());
        }
        // check proportionality: rest[r][c] * factor[pivot_row] == factor[r] * rest[pivot_row][c]
        for r in 0..d {
            for c in 0..rest_dim {
                let lhs = &rest[r * rest_dim + c] * &pivot;
                let rhs = &factor[r] * &rest[pivot_row * rest_dim + c];
                if lhs != rhs {
                    return None;
                }
            }
        }
        let next: Vec<GaussianRational> = (0..rest_dim)
            .map(|c| rest[pivot_row * rest_dim + c].clone())
            .collect();
        factors.push(normalize_integer_direction(factor));
        rest = next;
    }
    Some(factors)
}

/// Scales a vector so entries become small integers with positive leading
/// sign where possible (display only; direction is what matters).
fn normalize_integer_direction(v: Vec<GaussianRational>) -> Vec<GaussianRational> {
    let lead = v.iter().find(|a| !a.is_zero()).cloned();
    let Some(lead) = lead else { return v };
    if lead.im.is_zero() {
        let c = lead.re;
        v.into_iter().map(|a| a.scale(&(Rational::one() / &c))).collect()
    } else {
        v
    }
}

fn coeff_prefix(c: &GaussianRational) -> String {
    if c.is_real() {
        if c.re.is_one() {
            String::new()
        } else if (-c.re.clone()).is_one() {
            "-".to_string()
        } else {
            format!("{}*", format_rational(&c.re))
        }
    } else {
        format!("({})*", c)
    }
}

fn render_factor(factor: &[GaussianRational], one_based: bool) -> String {
    let off = usize::from(one_based);
    let mut out = String::new();
    let mut first = true;
    for (k, c) in factor.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let prefix = coeff_prefix(c);
        if first {
            out.push_str(&prefix);
            first = false;
        } else if prefix.starts_with('-') {
            out.push_str(&prefix);
        } else {
            out.push('+');
            out.push_str(&prefix);
        }
        out.push_str(&(k + off).to_string());
    }
    out
}

/// Human-readable ket notation: product kets render per party
/// (`|0+1>|1>|2>`), short entangled kets as explicit terms
/// (`|000>+|111>`), anything else falls back to the stored label or a
/// positional name.
pub fn notation(ket: &Ket, one_based: bool) -> String {
    if let Some(factors) = factorize(ket) {
        let mut out = String::new();
        for f in &factors {
            out.push('|');
            out.push_str(&render_factor(f, one_based));
            out.push('>');
        }
        return out;
    }
    let profile = ket.profile();
    let terms: Vec<(usize, &GaussianRational)> = ket
        .amplitudes()
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .collect();
    if terms.len() <= 4 {
        let off = usize::from(one_based);
        let sep = if profile.dims().iter().any(|&d| d + off > 10) {
            ","
        } else {
            ""
        };
        let mut out = String::new();
        for (idx, (g, a)) in terms.iter().enumerate() {
            let prefix = coeff_prefix(a);
            if idx == 0 {
                out.push_str(&prefix);
            } else if prefix.starts_with('-') {
                out.push_str(&prefix);
            } else {
                out.push('+');
                out.push_str(&prefix);
            }
            let labels = profile.labels_of(*g);
            out.push('|');
            let rendered: Vec<String> =
                labels.iter().map(|&k| (k + off).to_string()).collect();
            out.push_str(&rendered.join(sep));
            out.push('>');
        }
        return out;
    }
    ket.label.clone().unwrap_or_else(|| "psi".to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::partitions::Grouping;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_integer(n)
    }

    fn profile(dims: &[usize]) -> DimensionProfile {
        DimensionProfile::new(dims.to_vec()).unwrap()
    }

    #[test]
    fn mixed_radix_convention() {
        let p = profile(&[3, 3, 3]);
        assert_eq!(p.global_index(&[0, 1, 0]).unwrap(), 9);
        assert_eq!(p.global_index(&[0, 1, 1]).unwrap(), 10);
        assert_eq!(p.labels_of(10), vec![0, 1, 1]);
    }

    #[test]
    fn product_ket_places_amplitudes() {
        let p = profile(&[2, 2]);
        let k = product_ket(p.clone(), &[vec![g(1), g(0)], vec![g(1), g(0)]]).unwrap();
        assert_eq!(k.amplitude(0), &g(1));
        assert!(k.amplitude(1).is_zero());

        let k = product_ket(p, &[vec![g(0), g(1)], vec![g(1), g(1)]]).unwrap();
        let amps: Vec<i64> = (0..4)
            .map(|i| if k.amplitude(i).is_zero() { 0 } else { 1 })
            .collect();
        assert_eq!(amps, vec![0, 0, 1, 1]);
    }

    #[test]
    fn product_ket_on_qutrits() {
        // |1>|2>|1+2> in the paper's 1-based labels
        let p = profile(&[3, 3, 3]);
        let k = product_ket(
            p,
            &[
                vec![g(1), g(0), g(0)],
                vec![g(0), g(1), g(0)],
                vec![g(1), g(1), g(0)],
            ],
        )
        .unwrap();
        for i in 0..27 {
            let expect = i == 9 || i == 10;
            assert_eq!(!k.amplitude(i).is_zero(), expect, "index {i}");
        }
    }

    #[test]
    fn product_ket_rejects_zero_factor() {
        let p = profile(&[2, 2]);
        let err = product_ket(p, &[vec![g(0), g(0)], vec![g(1), g(0)]]).unwrap_err();
        assert_eq!(err, StateError::ZeroFactor { party: 0 });
    }

    #[test]
    fn inner_product_examples() {
        let p = profile(&[2, 2]);
        let plus = Ket::from_terms(p.clone(), &[(&[0, 0], g(1)), (&[1, 1], g(1))]).unwrap();
        let minus = Ket::from_terms(p, &[(&[0, 0], g(1)), (&[1, 1], g(-1))]).unwrap();
        assert_eq!(inner_product(&plus, &plus).unwrap(), g(2));
        assert!(inner_product(&plus, &minus).unwrap().is_zero());
    }

    #[test]
    fn inner_product_is_conjugate_symmetric() {
        let p = profile(&[2, 2]);
        let a = Ket::from_terms(
            p.clone(),
            &[(&[0, 0], GaussianRational::new(rat(1), rat(2))), (&[1, 0], g(3))],
        )
        .unwrap();
        let b = Ket::from_terms(
            p,
            &[(&[0, 0], g(1)), (&[1, 1], GaussianRational::new(rat(0), rat(-1)))],
        )
        .unwrap();
        let ab = inner_product(&a, &b).unwrap();
        let ba = inner_product(&b, &a).unwrap();
        assert_eq!(ab.conj(), ba);
    }

    #[test]
    fn validation_reports_offending_pair() {
        let p = profile(&[2]);
        let zero_one = Ket::from_terms(p.clone(), &[(&[0], g(1))]).unwrap();
        let mixed = Ket::from_terms(p.clone(), &[(&[0], g(1)), (&[1], g(1))]).unwrap();
        let report = validate_state_set(p, vec![zero_one, mixed]).unwrap_err();
        assert_eq!(
            report.violations,
            vec![Violation::NonOrthogonalPair {
                first: 0,
                second: 1,
                inner: g(1)
            }]
        );
    }

    #[test]
    fn validation_flags_duplicates_specially() {
        let p = profile(&[2]);
        let a = Ket::from_terms(p.clone(), &[(&[0], g(1))]).unwrap();
        let b = Ket::from_terms(p.clone(), &[(&[0], g(-3))]).unwrap();
        let report = validate_state_set(p, vec![a, b]).unwrap_err();
        assert_eq!(report.violations, vec![Violation::Duplicate { first: 0, second: 1 }]);
    }

    #[test]
    fn schmidt_rank_product_vs_entangled() {
        let p = profile(&[2, 2, 2]);
        let ghz = Ket::from_terms(p.clone(), &[(&[0, 0, 0], g(1)), (&[1, 1, 1], g(1))]).unwrap();
        let appendix_d = Ket::from_terms(p.clone(), &[(&[0, 1, 1], g(1)), (&[1, 0, 0], g(1))]).unwrap();
        let prod = product_ket(
            p.clone(),
            &[vec![g(1), g(1)], vec![g(1), g(0)], vec![g(0), g(1)]],
        )
        .unwrap();
        for grouping in crate::partitions::bipartitions(3).unwrap() {
            assert_eq!(schmidt_rank_across(&ghz, &grouping).unwrap(), 2);
            assert_eq!(schmidt_rank_across(&prod, &grouping).unwrap(), 1);
        }
        let a_bc = Grouping::new(vec![vec![0], vec![1, 2]], 3).unwrap();
        assert_eq!(schmidt_rank_across(&appendix_d, &a_bc).unwrap(), 2);
    }

    #[test]
    fn schmidt_rank_side_swap_invariant() {
        let p = profile(&[2, 4]);
        let k = Ket::from_terms(p, &[(&[0, 0], g(1)), (&[1, 3], g(2)), (&[0, 2], g(1))]).unwrap();
        let ab = Grouping::new(vec![vec![0], vec![1]], 2).unwrap();
        let ba = Grouping::new(vec![vec![1], vec![0]], 2).unwrap();
        assert_eq!(
            schmidt_rank_across(&k, &ab).unwrap(),
            schmidt_rank_across(&k, &ba).unwrap()
        );
    }

    #[test]
    fn notation_renders_products_and_sums() {
        let p = profile(&[3, 3, 3]);
        let k = product_ket(
            p.clone(),
            &[
                vec![g(1), g(0), g(0)],
                vec![g(0), g(1), g(0)],
                vec![g(1), g(1), g(0)],
            ],
        )
        .unwrap();
        assert_eq!(notation(&k, false), "|0>|1>|0+1>");
        assert_eq!(notation(&k, true), "|1>|2>|1+2>");
        let q = profile(&[2, 2, 2]);
        let ghz = Ket::from_terms(q, &[(&[0, 0, 0], g(1)), (&[1, 1, 1], g(-1))]).unwrap();
        assert_eq!(notation(&ghz, false), "|000>-|111>");
    }
}
