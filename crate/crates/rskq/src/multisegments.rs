//! Segments, multisegments and their order structure.
//!
//! A segment `[b,e]` stands for the interval root `alpha_b + ... + alpha_e`.
//! A multisegment is a formal sum of segments with nonnegative integer
//! multiplicities, kept in right-lexicographic canonical order. On top of
//! the raw data this module provides the linkage relation, the strict
//! ladder order, minimum ladder covers (width), left-aligned decompositions
//! and the spherical multisegment of a given weight.
//!
//! Text grammar used by the CLI:
//! `multisegment := term ("+" term)*`, `term := [INT "*"] "[" INT "," INT "]"`,
//! for example `2*[1,1]+[2,3]`. Whitespace is ignored; `0` denotes the zero
//! multisegment.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::root_lattice::RootVector;

/// An integer interval `[b,e]` with `b <= e`, read as the interval root
/// `alpha_b + ... + alpha_e`.
///
/// The derived `Ord` is the left-lexicographic order (begin, then end);
/// [`Segment::cmp_right`] gives the right-lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    begin: i32,
    end: i32,
}

impl Segment {
    pub fn new(begin: i32, end: i32) -> Result<Self> {
        if begin > end {
            return Err(Error::InvalidSegment { b: begin, e: end });
        }
        Ok(Segment { begin, end })
    }

    pub fn begin(&self) -> i32 {
        self.begin
    }

    pub fn end(&self) -> i32 {
        self.end
    }

    /// Number of simple roots in the interval.
    pub fn height(&self) -> u32 {
        (self.end - self.begin + 1) as u32
    }

    pub fn weight(&self) -> RootVector {
        RootVector::from_pairs((self.begin..=self.end).map(|i| (i, 1)))
    }

    /// Both endpoints shifted by `k`.
    pub fn translated(&self, k: i32) -> Segment {
        Segment {
            begin: self.begin + k,
            end: self.end + k,
        }
    }

    /// The left shift `[b-1, e-1]`.
    pub fn left_shifted(&self) -> Segment {
        self.translated(-1)
    }

    /// Right-lexicographic comparison: end point first, then begin point.
    pub fn cmp_right(&self, other: &Segment) -> Ordering {
        (self.end, self.begin).cmp(&(other.end, other.begin))
    }

    /// The precedence relation: strictly increasing endpoints that still
    /// overlap or juxtapose.
    pub fn precedes(&self, other: &Segment) -> bool {
        self.begin < other.begin && self.end < other.end && self.end >= other.begin - 1
    }

    /// Linked in either direction; linked products of segment modules are
    /// the reducible ones.
    pub fn is_linked(&self, other: &Segment) -> bool {
        self.precedes(other) || other.precedes(self)
    }

    /// The strict ladder order: both endpoints strictly smaller.
    pub fn ladder_less(&self, other: &Segment) -> bool {
        self.begin < other.begin && self.end < other.end
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.begin, self.end)
    }
}

/// A formal sum of segments with positive multiplicities, canonically
/// sorted by the right-lexicographic order with duplicates merged.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multisegment {
    terms: Vec<(Segment, u32)>,
}

impl Multisegment {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_segments<I: IntoIterator<Item = Segment>>(segments: I) -> Self {
        let mut m = Self::zero();
        for s in segments {
            m.push(s, 1);
        }
        m
    }

    pub fn from_terms<I: IntoIterator<Item = (Segment, u32)>>(terms: I) -> Self {
        let mut m = Self::zero();
        for (s, c) in terms {
            m.push(s, c);
        }
        m
    }

    fn push(&mut self, seg: Segment, count: u32) {
        if count == 0 {
            return;
        }
        match self.terms.binary_search_by(|(s, _)| s.cmp_right(&seg)) {
            Ok(pos) => self.terms[pos].1 += count,
            Err(pos) => self.terms.insert(pos, (seg, count)),
        }
    }

    pub fn plus(&self, other: &Multisegment) -> Multisegment {
        let mut out = self.clone();
        for (s, c) in other.iter_terms() {
            out.push(s, c);
        }
        out
    }

    pub fn plus_segment(&self, seg: Segment) -> Multisegment {
        let mut out = self.clone();
        out.push(seg, 1);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total number of segments counted with multiplicity.
    pub fn size(&self) -> u32 {
        self.terms.iter().map(|&(_, c)| c).sum()
    }

    /// Distinct segments in canonical order, with multiplicities.
    pub fn iter_terms(&self) -> impl Iterator<Item = (Segment, u32)> + '_ {
        self.terms.iter().copied()
    }

    /// Segments expanded with multiplicity, in canonical order.
    pub fn iter_segments(&self) -> impl Iterator<Item = Segment> + '_ {
        self.terms
            .iter()
            .flat_map(|&(s, c)| std::iter::repeat_n(s, c as usize))
    }

    pub fn weight(&self) -> RootVector {
        let mut w = RootVector::zero();
        for (s, c) in self.iter_terms() {
            for _ in 0..c {
                w = w.plus(&s.weight());
            }
        }
        w
    }

    /// The multiset of begin points as a root vector.
    pub fn begins(&self) -> RootVector {
        RootVector::from_pairs(self.iter_terms().map(|(s, c)| (s.begin(), c)))
    }

    /// The multiset of end points as a root vector.
    pub fn ends(&self) -> RootVector {
        RootVector::from_pairs(self.iter_terms().map(|(s, c)| (s.end(), c)))
    }

    pub fn translated(&self, k: i32) -> Multisegment {
        Multisegment::from_terms(self.iter_terms().map(|(s, c)| (s.translated(k), c)))
    }

    /// True if all segment pairs (including equal copies) are unlinked.
    pub fn is_pairwise_unlinked(&self) -> bool {
        let segs: Vec<Segment> = self.iter_segments().collect();
        for (a, s) in segs.iter().enumerate() {
            for t in segs.iter().skip(a + 1) {
                if s.is_linked(t) {
                    return false;
                }
            }
        }
        true
    }

    /// Minimal number of ladders covering the multiset of segments.
    ///
    /// Computed as a minimum chain cover of the strict ladder order via
    /// maximum bipartite matching on the (transitive) comparability graph;
    /// equal copies of a segment are distinct elements that are never
    /// comparable.
    pub fn width(&self) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroMultisegment);
        }
        let segs: Vec<Segment> = self.iter_segments().collect();
        let n = segs.len();
        let adj: Vec<Vec<usize>> = (0..n)
            .map(|u| (0..n).filter(|&v| segs[u].ladder_less(&segs[v])).collect())
            .collect();
        let matching = max_bipartite_matching(n, &adj);
        Ok((n - matching) as u32)
    }

    /// Grouping by begin point: groups in ascending begin order, ends
    /// descending inside each group. Concatenation reconstructs the
    /// multisegment.
    pub fn left_aligned_decomposition(&self) -> Result<Vec<LeftAlignedBlock>> {
        if self.is_zero() {
            return Err(Error::ZeroMultisegment);
        }
        let mut segs: Vec<Segment> = self.iter_segments().collect();
        segs.sort_by_key(|s| (s.begin(), -s.end()));
        let mut blocks: Vec<LeftAlignedBlock> = Vec::new();
        for s in segs {
            match blocks.last_mut() {
                Some(b) if b.begin == s.begin() => b.ends.push(s.end()),
                _ => blocks.push(LeftAlignedBlock {
                    begin: s.begin(),
                    ends: vec![s.end()],
                }),
            }
        }
        Ok(blocks)
    }

    /// Attempt to arrange the segments into a single strict ladder chain,
    /// returned in descending order.
    pub fn as_ladder(&self) -> Option<LadderMultisegment> {
        if self.is_zero() {
            return None;
        }
        let mut segs: Vec<Segment> = self.iter_segments().collect();
        segs.sort_by_key(|s| std::cmp::Reverse((s.begin(), s.end())));
        for k in 1..segs.len() {
            if !segs[k].ladder_less(&segs[k - 1]) {
                return None;
            }
        }
        Some(LadderMultisegment { segs })
    }

    /// Canonical text form, e.g. `2*[1,1]+[2,3]`; `0` for the zero sum.
    pub fn canonical_string(&self) -> String {
        format!("{self}")
    }

    /// Parse the text grammar. Whitespace is ignored.
    pub fn parse(input: &str) -> Result<Multisegment> {
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty multisegment".into()));
        }
        if compact == "0" {
            return Ok(Multisegment::zero());
        }
        let mut m = Multisegment::zero();
        for term in compact.split('+') {
            let (count, rest) = match term.split_once('*') {
                Some((n, rest)) => {
                    let count: u32 = n
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad multiplicity `{n}`")))?;
                    (count, rest)
                }
                None => (1, term),
            };
            let inner = rest
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("bad segment term `{term}`")))?;
            let (b, e) = inner
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("bad segment term `{term}`")))?;
            let b: i32 = b
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer `{b}`")))?;
            let e: i32 = e
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer `{e}`")))?;
            let seg = Segment::new(b, e)
                .map_err(|_| Error::Parse(format!("segment [{b},{e}] requires {b} <= {e}")))?;
            if count == 0 {
                return Err(Error::Parse("zero multiplicity term".into()));
            }
            m.push(seg, count);
        }
        Ok(m)
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (s, c) in self.iter_terms() {
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if c == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{c}*{s}")?;
            }
        }
        Ok(())
    }
}

/// One group of a left-aligned decomposition: a shared begin point and the
/// end points in descending order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftAlignedBlock {
    pub begin: i32,
    pub ends: Vec<i32>,
}

impl LeftAlignedBlock {
    pub fn weight(&self) -> RootVector {
        self.to_multisegment().weight()
    }

    pub fn to_multisegment(&self) -> Multisegment {
        Multisegment::from_segments(
            self.ends
                .iter()
                .map(|&e| Segment::new(self.begin, e).expect("block invariant")),
        )
    }
}

/// A multisegment whose segments form a single strict ladder chain,
/// stored in descending chain order (largest first).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LadderMultisegment {
    segs: Vec<Segment>,
}

impl LadderMultisegment {
    pub fn single(seg: Segment) -> Self {
        LadderMultisegment { segs: vec![seg] }
    }

    /// Build from strictly decreasing begin points `lambda` and upper bounds
    /// `mu` (`mu[i] - 1` is the end point); rows with `lambda[i] == mu[i]`
    /// are empty and dropped.
    pub fn from_lambda_mu(lambda: &[i32], mu: &[i32]) -> Result<Self> {
        if lambda.len() != mu.len() {
            return Err(Error::MalformedLadder("length mismatch".into()));
        }
        for k in 1..lambda.len() {
            if lambda[k] >= lambda[k - 1] || mu[k] >= mu[k - 1] {
                return Err(Error::MalformedLadder(
                    "sequences must strictly decrease".into(),
                ));
            }
        }
        let mut segs = Vec::new();
        for (&l, &m) in lambda.iter().zip(mu) {
            if l > m {
                return Err(Error::MalformedLadder(format!(
                    "requires lambda <= mu, got {l} > {m}"
                )));
            }
            if l < m {
                segs.push(Segment::new(l, m - 1)?);
            }
        }
        if segs.is_empty() {
            return Err(Error::MalformedLadder("all rows empty".into()));
        }
        Ok(LadderMultisegment { segs })
    }

    /// Segments in descending chain order.
    pub fn segments(&self) -> &[Segment] {
        &self.segs
    }

    pub fn len(&self) -> usize {
        self.segs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segs.is_empty()
    }

    /// The strictly decreasing begin points.
    pub fn lambda(&self) -> Vec<i32> {
        self.segs.iter().map(|s| s.begin()).collect()
    }

    /// The strictly decreasing end points shifted up by one.
    pub fn mu(&self) -> Vec<i32> {
        self.segs.iter().map(|s| s.end() + 1).collect()
    }

    pub fn to_multisegment(&self) -> Multisegment {
        Multisegment::from_segments(self.segs.iter().copied())
    }

    pub fn weight(&self) -> RootVector {
        self.to_multisegment().weight()
    }

    pub fn size(&self) -> u32 {
        self.segs.len() as u32
    }

    pub fn translated(&self, k: i32) -> LadderMultisegment {
        LadderMultisegment {
            segs: self.segs.iter().map(|s| s.translated(k)).collect(),
        }
    }
}

impl fmt::Display for LadderMultisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_multisegment())
    }
}

/// The unique multisegment of weight `beta` whose segments are pairwise
/// unlinked, built by greedily peeling maximal support intervals.
///
/// The greedy output is verified; if verification ever failed the result
/// would be recovered by exhaustive search below height 8.
pub fn spherical_multisegment(beta: &RootVector) -> Result<Multisegment> {
    if beta.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let mut residual = beta.clone();
    let mut m = Multisegment::zero();
    while !residual.is_zero() {
        let lo = residual.support_min().expect("nonzero residual");
        let hi = residual.support_max().expect("nonzero residual");
        let mut run_start: Option<i32> = None;
        let mut runs: Vec<(i32, i32)> = Vec::new();
        for i in lo..=hi {
            if residual.multiplicity(i) > 0 {
                run_start.get_or_insert(i);
            } else if let Some(s) = run_start.take() {
                runs.push((s, i - 1));
            }
        }
        if let Some(s) = run_start {
            runs.push((s, hi));
        }
        for (b, e) in runs {
            let seg = Segment::new(b, e)?;
            residual = residual
                .checked_sub(&seg.weight())
                .ok_or_else(|| Error::InternalInconsistency("peeling over-subtracted".into()))?;
            m = m.plus_segment(seg);
        }
    }
    if m.is_pairwise_unlinked() {
        return Ok(m);
    }
    if beta.height() < 8 {
        let unlinked: Vec<Multisegment> = multisegments_with_weight(beta)
            .into_iter()
            .filter(Multisegment::is_pairwise_unlinked)
            .collect();
        if let [only] = unlinked.as_slice() {
            return Ok(only.clone());
        }
    }
    Err(Error::InternalInconsistency(
        "no unique pairwise-unlinked multisegment found".into(),
    ))
}

/// Every multisegment of weight exactly `beta`.
///
/// Finite because segments must fit inside the support of `beta`; intended
/// for desk-scale weights.
pub fn multisegments_with_weight(beta: &RootVector) -> Vec<Multisegment> {
    if beta.is_zero() {
        return vec![Multisegment::zero()];
    }
    let lo = beta.support_min().expect("nonzero");
    let hi = beta.support_max().expect("nonzero");
    let mut candidates: Vec<Segment> = Vec::new();
    for b in lo..=hi {
        for e in b..=hi {
            let seg = Segment::new(b, e).expect("b <= e");
            if seg.weight().leq(beta) {
                candidates.push(seg);
            }
        }
    }
    let mut out = Vec::new();
    let mut acc: Vec<(Segment, u32)> = Vec::new();
    fn recurse(
        candidates: &[Segment],
        pos: usize,
        residual: &RootVector,
        acc: &mut Vec<(Segment, u32)>,
        out: &mut Vec<Multisegment>,
    ) {
        if residual.is_zero() {
            out.push(Multisegment::from_terms(acc.iter().copied()));
            return;
        }
        if pos == candidates.len() {
            return;
        }
        let seg = candidates[pos];
        let mut left = Some(residual.clone());
        let mut count = 0u32;
        while let Some(r) = &left {
            if count > 0 {
                acc.push((seg, count));
            }
            recurse(candidates, pos + 1, r, acc, out);
            if count > 0 {
                acc.pop();
            }
            count += 1;
            left = left.and_then(|r| r.checked_sub(&seg.weight()));
        }
    }
    recurse(&candidates, 0, beta, &mut acc, &mut out);
    out.sort();
    out
}

/// Kuhn's augmenting-path maximum matching on a bipartite copy of the
/// element set; `adj[u]` lists the right-side vertices reachable from `u`.
fn max_bipartite_matching(n: usize, adj: &[Vec<usize>]) -> usize {
    let mut match_right: Vec<Option<usize>> = vec![None; n];
    let mut size = 0;
    for u in 0..n {
        let mut seen = vec![false; n];
        if augment(u, adj, &mut match_right, &mut seen) {
            size += 1;
        }
    }
    size
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    match_right: &mut [Option<usize>],
    seen: &mut [bool],
) -> bool {
    for &v in &adj[u] {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        if match_right[v].is_none() || augment(match_right[v].unwrap(), adj, match_right, seen) {
            match_right[v] = Some(u);
            return true;
        }
    }
    false
}
