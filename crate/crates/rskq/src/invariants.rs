//! Counting invariants of permissible pairs and the grading shifts they
//! control.
//!
//! `C` counts juxtaposed begin/end pairs across two multisegments; `D` is
//! the signed count of the three index sets attached to a permissible pair
//! and always equals the body size. Their difference `kappa = C - D` is the
//! degree at which the indicator of the composed multisegment shows up in
//! the restricted product, and `-kappa` is the head shift `lambda_tilde`.
//! Summing head shifts over a ladder sequence yields the normalization
//! shift `d` of the RSK-standard product, computed here by three routes
//! that are asserted equal.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::multisegments::{LadderMultisegment, Multisegment};
use crate::root_lattice::form_on_vectors;
use crate::rsk::{self, build_permissible, is_permissible, Part, PermissiblePair};

/// Number of pairs (with multiplicity) whose begin point in `m1` equals an
/// end point in `m2` plus one.
pub fn c_count(m1: &Multisegment, m2: &Multisegment) -> i64 {
    let mut count = 0i64;
    for (s, cs) in m1.iter_terms() {
        for (t, ct) in m2.iter_terms() {
            if s.begin() == t.end() + 1 {
                count += i64::from(cs) * i64::from(ct);
            }
        }
    }
    count
}

/// The three index sets underlying the `D` invariant of a permissible pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NuSets {
    pub nu1: Vec<(Part, Part)>,
    pub nu2: Vec<(Part, Part)>,
    pub nu3: Vec<(Part, Part)>,
}

impl NuSets {
    pub fn d_count(&self) -> i64 {
        self.nu1.len() as i64 - self.nu2.len() as i64 + self.nu3.len() as i64
    }
}

/// Scan all index pairs of a permissible pair for the three defining
/// conjunctions.
pub fn nu_sets(pair: &PermissiblePair) -> Result<NuSets> {
    let mut sets = NuSets {
        nu1: Vec::new(),
        nu2: Vec::new(),
        nu3: Vec::new(),
    };
    for i1 in pair.body_parts() {
        let s1 = pair.segment(i1);
        for i2 in pair.body_parts() {
            let s2 = pair.segment(i2);
            let club2 = pair.club(i2)?;
            if s1.begin() <= s2.begin() && s2.end() < club2.end() && club2.end() == s1.end() {
                sets.nu1.push((i1, i2));
            }
            if s1.begin() < s2.begin() && s1.end() == s2.end() && s2.end() < club2.end() {
                sets.nu2.push((i1, i2));
            }
        }
        for j in pair.ladder_parts() {
            let sj = pair.segment(j);
            let clubj = pair.club(j)?;
            if s1.begin() <= sj.begin() && clubj.end() == s1.end() {
                sets.nu3.push((i1, j));
            }
        }
    }
    Ok(sets)
}

/// `D = |nu1| - |nu2| + |nu3|`; equals the body size.
pub fn d_count(pair: &PermissiblePair) -> Result<i64> {
    Ok(nu_sets(pair)?.d_count())
}

/// `kappa = C - D`, which by the D-theorem equals `C - |m|`; both routes
/// are computed and compared.
pub fn kappa(pair: &PermissiblePair) -> Result<i64> {
    let c = c_count(&pair.ladder().to_multisegment(), &pair.body_multisegment());
    let d = d_count(pair)?;
    let via_size = c - i64::from(pair.body_len() as u32);
    if c - d != via_size {
        return Err(Error::InternalInconsistency(format!(
            "kappa routes disagree: C-D = {} but C-|m| = {via_size}",
            c - d
        )));
    }
    Ok(c - d)
}

/// The head shift of the product of a ladder module with the module of the
/// body: `|m| - C(l, m)`. Defined on permissible pairs only.
pub fn lambda_tilde(ladder: &LadderMultisegment, m: &Multisegment) -> Result<i64> {
    if !is_permissible(ladder, m) {
        return Err(Error::NotPermissible);
    }
    Ok(i64::from(m.size()) - c_count(&ladder.to_multisegment(), m))
}

/// The symmetrized invariant `2 * lambda_tilde - (wt(l), wt(m))`.
pub fn lambda_invariant(ladder: &LadderMultisegment, m: &Multisegment) -> Result<i64> {
    let lt = lambda_tilde(ladder, m)?;
    Ok(2 * lt - form_on_vectors(&ladder.weight(), &m.weight()))
}

/// The normalization shift of the RSK-standard product, by the closed
/// formula over the transform: `-sum (i-1)|l_i| + sum_{i<j} C(l_i, l_j)`.
/// Cross-checked against the head-shift sum over ladder pairs.
pub fn d_of_m(m: &Multisegment) -> Result<i64> {
    if m.is_zero() {
        return Err(Error::ZeroMultisegment);
    }
    let ladders = rsk::rsk_transform(m)?;
    let mut direct = 0i64;
    for (i, l) in ladders.iter().enumerate() {
        direct -= i as i64 * i64::from(l.size());
    }
    for i in 0..ladders.len() {
        for j in (i + 1)..ladders.len() {
            direct += c_count(&ladders[i].to_multisegment(), &ladders[j].to_multisegment());
        }
    }
    let via_heads = head_shift(&ladders)?;
    if direct != via_heads {
        return Err(Error::InternalInconsistency(format!(
            "d routes disagree: formula {direct}, head-shift sum {via_heads}"
        )));
    }
    Ok(direct)
}

/// The normalization shift read off the tableau pair: minus half the sum
/// of `col*(col-1)` over the conjugate partition, plus the number of
/// begin entries in earlier rows equal to end entries in later rows.
pub fn d_of_m_tableau(m: &Multisegment) -> Result<i64> {
    let t = rsk::tableaux(m)?;
    let mut total = 0i64;
    for col in t.conjugate() {
        total -= (col as i64) * (col as i64 - 1) / 2;
    }
    for i in 0..t.p.len() {
        for ip in (i + 1)..t.p.len() {
            for &c in &t.p[i] {
                for &d in &t.q[ip] {
                    if c == d {
                        total += 1;
                    }
                }
            }
        }
    }
    Ok(total)
}

/// The grading shift of the self-dual head inside an unnormalized ladder
/// product: minus the sum of pairwise head shifts.
pub fn head_shift(ladders: &[LadderMultisegment]) -> Result<i64> {
    let mut total = 0i64;
    for i in 0..ladders.len() {
        for j in (i + 1)..ladders.len() {
            total -= lambda_tilde(&ladders[i], &ladders[j].to_multisegment())?;
        }
    }
    Ok(total)
}

/// Verify the head-shift additivity down the tail of a ladder sequence:
/// for each position, the shift against the composed head of the tail must
/// equal the sum of the shifts against the tail's factors.
pub fn is_normal_sequence(ladders: &[LadderMultisegment]) -> Result<bool> {
    for i in 0..ladders.len().saturating_sub(1) {
        let tail_head = rsk::compose_ladders(&ladders[i + 1..])?;
        let lhs = lambda_tilde(&ladders[i], &tail_head)?;
        let mut rhs = 0i64;
        for l in &ladders[i + 1..] {
            rhs += lambda_tilde(&ladders[i], &l.to_multisegment())?;
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Invariant report for a permissible pair, as emitted by the CLI.
#[derive(Clone, Debug, Serialize)]
pub struct PairReport {
    #[serde(rename = "C")]
    pub c: i64,
    #[serde(rename = "D")]
    pub d_count: i64,
    pub kappa: i64,
    pub lambda_tilde: i64,
    pub d: i64,
    pub normal: bool,
}

/// Compute the full report: pair invariants plus the shift and normality
/// data of the composed multisegment.
pub fn pair_report(ladder: &LadderMultisegment, m: &Multisegment) -> Result<PairReport> {
    let pair = build_permissible(ladder, m)?;
    let c = c_count(&ladder.to_multisegment(), m);
    let d = d_count(&pair)?;
    let composed = pair.k_prime()?;
    Ok(PairReport {
        c,
        d_count: d,
        kappa: kappa(&pair)?,
        lambda_tilde: lambda_tilde(ladder, m)?,
        d: d_of_m(&composed)?,
        normal: is_normal_sequence(&rsk::rsk_transform(&composed)?)?,
    })
}
