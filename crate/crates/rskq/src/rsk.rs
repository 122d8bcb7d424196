//! The Knuth peeling step on multisegments and its explicit inverse.
//!
//! A permissible pair is a ladder together with a multisegment such that
//! every ladder chain of the multisegment injects, after a left shift, into
//! the ladder in an order-preserving way. [`build_permissible`] computes
//! the full work data of the inverse map: the depth functions, the cycle
//! permutation and the index maps `sharp`/`vee`; [`PermissiblePair::k_prime`]
//! assembles the composed multisegment.
//!
//! The forward direction runs a decreasing-tableau row insertion on the
//! biword of (begin, end+1) pairs. Its conventions are pinned by the
//! roundtrip contract with `k_prime`, which is enforced at runtime: every
//! transform output is folded back through `k_prime` and compared with the
//! input.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::multisegments::{LadderMultisegment, Multisegment, Segment};

/// Index into a permissible pair: a body segment or a ladder segment.
///
/// `Ladder(pos)` refers to the `pos`-th segment of the ladder in descending
/// chain order, i.e. its depth is `pos + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Part {
    Body(usize),
    Ladder(usize),
}

/// A certified permissible pair carrying the inverse-Knuth work data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermissiblePair {
    ladder: LadderMultisegment,
    /// Body segments ordered so that later indices have larger begin
    /// points, ties broken by smaller end points.
    body: Vec<Segment>,
    depth_prime: Vec<usize>,
    depth_body: Vec<usize>,
    sigma: Vec<Part>,
    sigma_inv: Vec<Part>,
}

impl PermissiblePair {
    pub fn ladder(&self) -> &LadderMultisegment {
        &self.ladder
    }

    /// Body segments in index order.
    pub fn body(&self) -> &[Segment] {
        &self.body
    }

    pub fn body_multisegment(&self) -> Multisegment {
        Multisegment::from_segments(self.body.iter().copied())
    }

    pub fn body_len(&self) -> usize {
        self.body.len()
    }

    pub fn ladder_len(&self) -> usize {
        self.ladder.len()
    }

    pub fn body_parts(&self) -> impl Iterator<Item = Part> {
        (0..self.body_len()).map(Part::Body)
    }

    pub fn ladder_parts(&self) -> impl Iterator<Item = Part> {
        (0..self.ladder_len()).map(Part::Ladder)
    }

    pub fn parts(&self) -> impl Iterator<Item = Part> {
        self.body_parts().chain(self.ladder_parts())
    }

    pub fn segment(&self, part: Part) -> Segment {
        match part {
            Part::Body(i) => self.body[i],
            Part::Ladder(pos) => self.ladder.segments()[pos],
        }
    }

    fn flat(&self, part: Part) -> usize {
        match part {
            Part::Body(i) => i,
            Part::Ladder(pos) => self.body.len() + pos,
        }
    }

    /// The depth of an index; ladder indices have their chain position as
    /// depth by convention.
    pub fn depth(&self, part: Part) -> usize {
        match part {
            Part::Body(i) => self.depth_body[i],
            Part::Ladder(pos) => pos + 1,
        }
    }

    /// The raw depth bound of a body index: the deepest ladder position the
    /// left-shifted segment still sits strictly below.
    pub fn depth_prime(&self, body_index: usize) -> usize {
        self.depth_prime[body_index]
    }

    /// The cycle permutation evaluated at an index.
    pub fn sharp(&self, part: Part) -> Part {
        self.sigma[self.flat(part)]
    }

    pub fn sigma_inverse(&self, part: Part) -> Part {
        self.sigma_inv[self.flat(part)]
    }

    /// The composed segment at an index: its own begin point with the end
    /// point of its successor under the cycle permutation.
    pub fn club(&self, part: Part) -> Result<Segment> {
        let own = self.segment(part);
        let next = self.segment(self.sharp(part));
        Segment::new(own.begin(), next.end()).map_err(|_| {
            Error::InvalidCertificate(format!(
                "composed segment [{},{}] is empty",
                own.begin(),
                next.end()
            ))
        })
    }

    /// The first index against the cycle whose composed segment changed its
    /// end point; falls back to the ladder index at this index's depth.
    pub fn vee(&self, part: Part) -> Result<Part> {
        let mut x = part;
        loop {
            x = self.sigma_inverse(x);
            if self.club(x)?.end() != self.segment(x).end() {
                return Ok(x);
            }
            if x == part {
                return Ok(Part::Ladder(self.depth(part) - 1));
            }
        }
    }

    /// The inverse Knuth map: the sum of all composed segments.
    pub fn k_prime(&self) -> Result<Multisegment> {
        let mut out = Multisegment::zero();
        for part in self.parts() {
            out = out.plus_segment(self.club(part)?);
        }
        Ok(out)
    }
}

/// Order the segments of a multisegment by ascending begin point, breaking
/// ties by descending end point; this is the index order assumed by the
/// depth and cycle constructions.
pub fn body_index_order(m: &Multisegment) -> Vec<Segment> {
    let mut segs: Vec<Segment> = m.iter_segments().collect();
    segs.sort_by_key(|s| (s.begin(), std::cmp::Reverse(s.end())));
    segs
}

/// Decide permissibility: every ladder chain of `m`, read downward, must
/// greedily embed (after a left shift, under the precedence relation) into
/// strictly deeper positions of `ladder`.
///
/// Walks all descending chains of the body, so the cost is exponential in
/// the body size; intended for desk-scale inputs. The greedy embedding is
/// exact because the feasible ladder positions of each segment form an
/// interval.
pub fn is_permissible(ladder: &LadderMultisegment, m: &Multisegment) -> bool {
    let body = body_index_order(m);
    let lsegs = ladder.segments();
    let n = body.len();
    // feasible[i] = ladder positions (1-based depth) for the shifted body segment
    let feasible: Vec<Vec<usize>> = body
        .iter()
        .map(|s| {
            let shifted = s.left_shifted();
            (1..=lsegs.len())
                .filter(|&t| shifted.precedes(&lsegs[t - 1]))
                .collect()
        })
        .collect();
    if feasible.iter().any(|f| f.is_empty()) {
        return false;
    }
    // DFS over descending chains, committing the smallest feasible depth.
    fn dfs(at: usize, min_depth: usize, body: &[Segment], feasible: &[Vec<usize>]) -> bool {
        let depth = match feasible[at].iter().find(|&&t| t >= min_depth) {
            Some(&t) => t,
            None => return false,
        };
        for next in 0..body.len() {
            if body[next].ladder_less(&body[at]) && !dfs(next, depth + 1, body, feasible) {
                return false;
            }
        }
        true
    }
    (0..n).all(|start| dfs(start, 1, &body, &feasible))
}

/// Compute the full inverse-Knuth certificate for a permissible pair.
pub fn build_permissible(ladder: &LadderMultisegment, m: &Multisegment) -> Result<PermissiblePair> {
    if !is_permissible(ladder, m) {
        return Err(Error::NotPermissible);
    }
    let body = body_index_order(m);
    let lsegs = ladder.segments();
    let n = body.len();
    let l = lsegs.len();

    let depth_prime: Vec<usize> = body
        .iter()
        .map(|s| {
            let shifted = s.left_shifted();
            (1..=l)
                .filter(|&t| shifted.ladder_less(&lsegs[t - 1]))
                .max()
                .ok_or(Error::NotPermissible)
        })
        .collect::<Result<_>>()?;

    // depth recursion over the strict ladder order, smallest elements first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| body[i].begin() + body[i].end());
    let mut depth_body = vec![0usize; n];
    for &i in &order {
        let mut d = depth_prime[i];
        for s in 0..n {
            if body[s].ladder_less(&body[i]) {
                d = d.min(depth_body[s].saturating_sub(1));
            }
        }
        if d == 0 {
            return Err(Error::InternalInconsistency(
                "depth fell below one on a permissible pair".into(),
            ));
        }
        depth_body[i] = d;
    }

    // cycles (i_1, ..., i_s, j_t) with body labels descending
    let mut sigma = vec![Part::Body(0); n + l];
    let mut sigma_inv = vec![Part::Body(0); n + l];
    let mut assign = |from: Part, to: Part| {
        let f = match from {
            Part::Body(i) => i,
            Part::Ladder(pos) => n + pos,
        };
        let t = match to {
            Part::Body(i) => i,
            Part::Ladder(pos) => n + pos,
        };
        sigma[f] = to;
        sigma_inv[t] = from;
    };
    for t in 1..=l {
        let mut members: Vec<usize> = (0..n).filter(|&i| depth_body[i] == t).collect();
        members.sort_by(|a, b| b.cmp(a));
        let mut cycle: Vec<Part> = members.into_iter().map(Part::Body).collect();
        cycle.push(Part::Ladder(t - 1));
        for k in 0..cycle.len() {
            assign(cycle[k], cycle[(k + 1) % cycle.len()]);
        }
    }

    Ok(PermissiblePair {
        ladder: ladder.clone(),
        body,
        depth_prime,
        depth_body,
        sigma,
        sigma_inv,
    })
}

/// The direct min-over-chains definition of the depth function; quadratic
/// cross-check for the recursion used in [`build_permissible`].
pub fn depth_by_chains(pair: &PermissiblePair) -> Vec<usize> {
    let body = pair.body();
    let n = body.len();
    fn dfs(at: usize, steps: i64, body: &[Segment], pair: &PermissiblePair, best: &mut i64) {
        *best = (*best).min(pair.depth_prime(at) as i64 - steps);
        for next in 0..body.len() {
            if body[next].ladder_less(&body[at]) {
                dfs(next, steps + 1, body, pair, best);
            }
        }
    }
    (0..n)
        .map(|i| {
            let mut best = i64::MAX;
            dfs(i, 0, body, pair, &mut best);
            debug_assert!(best >= 1);
            best as usize
        })
        .collect()
}

fn biword(m: &Multisegment) -> Vec<(i32, i32)> {
    let mut pairs: Vec<(i32, i32)> = m
        .iter_segments()
        .map(|s| (s.begin(), s.end() + 1))
        .collect();
    pairs.sort_by_key(|&(c, d)| (std::cmp::Reverse(d), c));
    pairs
}

/// Row insertion with strictly decreasing rows: the inserted value bumps
/// the leftmost entry less than or equal to it.
fn insert_rows(m: &Multisegment) -> (Vec<Vec<i32>>, Vec<Vec<i32>>) {
    let mut p: Vec<Vec<i32>> = Vec::new();
    let mut q: Vec<Vec<i32>> = Vec::new();
    for (c, d) in biword(m) {
        let mut x = c;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![x]);
                q.push(vec![d]);
                break;
            }
            match p[r].iter().position(|&y| y <= x) {
                None => {
                    p[r].push(x);
                    q[r].push(d);
                    break;
                }
                Some(pos) => {
                    std::mem::swap(&mut p[r][pos], &mut x);
                    r += 1;
                }
            }
        }
    }
    (p, q)
}

fn rows_to_ladders(p: &[Vec<i32>], q: &[Vec<i32>]) -> Result<Vec<LadderMultisegment>> {
    let mut out = Vec::with_capacity(p.len());
    for (prow, qrow) in p.iter().zip(q) {
        let mut segs = Vec::with_capacity(prow.len());
        for (&c, &d) in prow.iter().zip(qrow) {
            segs.push(Segment::new(c, d - 1).map_err(|_| {
                Error::InternalInconsistency("insertion produced an empty segment".into())
            })?);
        }
        for k in 1..segs.len() {
            if !segs[k].ladder_less(&segs[k - 1]) {
                return Err(Error::InternalInconsistency(
                    "insertion row is not a strict ladder".into(),
                ));
            }
        }
        let m = Multisegment::from_segments(segs);
        out.push(
            m.as_ladder().ok_or_else(|| {
                Error::InternalInconsistency("insertion row is not a ladder".into())
            })?,
        );
    }
    Ok(out)
}

/// Fold a ladder sequence back into a multisegment by iterating the
/// inverse map from the innermost pair outward.
pub fn compose_ladders(ladders: &[LadderMultisegment]) -> Result<Multisegment> {
    let mut residual = Multisegment::zero();
    for ladder in ladders.iter().rev() {
        residual = build_permissible(ladder, &residual)?.k_prime()?;
    }
    Ok(residual)
}

/// The full transform: the ladder sequence whose length is the width of
/// the input. Each output is validated by folding it back through the
/// inverse map.
pub fn rsk_transform(m: &Multisegment) -> Result<Vec<LadderMultisegment>> {
    if m.is_zero() {
        return Err(Error::ZeroMultisegment);
    }
    let (p, q) = insert_rows(m);
    let ladders = rows_to_ladders(&p, &q)?;
    let rebuilt = compose_ladders(&ladders).map_err(|e| match e {
        Error::NotPermissible => {
            Error::InternalInconsistency("insertion produced a non-permissible pair".into())
        }
        other => other,
    })?;
    if &rebuilt != m {
        return Err(Error::InternalInconsistency(format!(
            "insertion roundtrip failed: got {rebuilt}, expected {m}"
        )));
    }
    Ok(ladders)
}

/// One peeling step: the first ladder together with the residual
/// multisegment (zero when the input is itself a ladder).
pub fn k_forward(m: &Multisegment) -> Result<(LadderMultisegment, Multisegment)> {
    let ladders = rsk_transform(m)?;
    let residual = compose_ladders(&ladders[1..])?;
    Ok((ladders[0].clone(), residual))
}

/// The pair of inverted semistandard tableaux encoding a transform:
/// strictly decreasing rows, weakly decreasing columns, common shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableauPair {
    pub shape: Vec<usize>,
    #[serde(rename = "P")]
    pub p: Vec<Vec<i32>>,
    #[serde(rename = "Q")]
    pub q: Vec<Vec<i32>>,
}

impl TableauPair {
    /// Row `i` re-read as a ladder.
    pub fn row_ladder(&self, i: usize) -> Result<LadderMultisegment> {
        LadderMultisegment::from_lambda_mu(&self.p[i], &self.q[i])
    }

    /// The conjugate (column) partition.
    pub fn conjugate(&self) -> Vec<usize> {
        let cols = self.shape.first().copied().unwrap_or(0);
        (0..cols)
            .map(|j| self.shape.iter().filter(|&&len| len > j).count())
            .collect()
    }

    fn validate(&self) -> Result<()> {
        let ok_shape = self.shape.windows(2).all(|w| w[0] >= w[1]);
        if !ok_shape {
            return Err(Error::InternalInconsistency(
                "tableau shape is not a partition".into(),
            ));
        }
        for rows in [&self.p, &self.q] {
            for row in rows {
                if !row.windows(2).all(|w| w[0] > w[1]) {
                    return Err(Error::InternalInconsistency(
                        "tableau row is not strictly decreasing".into(),
                    ));
                }
            }
            for i in 1..rows.len() {
                for (j, &below) in rows[i].iter().enumerate() {
                    if rows[i - 1][j] < below {
                        return Err(Error::InternalInconsistency(
                            "tableau column is not weakly decreasing".into(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

/// The tableaux of the transform, with all inverted-semistandard
/// invariants checked.
pub fn tableaux(m: &Multisegment) -> Result<TableauPair> {
    let ladders = rsk_transform(m)?;
    let p: Vec<Vec<i32>> = ladders.iter().map(|l| l.lambda()).collect();
    let q: Vec<Vec<i32>> = ladders.iter().map(|l| l.mu()).collect();
    let shape: Vec<usize> = p.iter().map(Vec::len).collect();
    let pair = TableauPair { shape, p, q };
    pair.validate()?;
    Ok(pair)
}

/// Descriptor of the RSK-standard product: the ladder factors together with
/// the normalization shift.
pub fn gamma_descriptor(m: &Multisegment) -> Result<(Vec<LadderMultisegment>, i64)> {
    let ladders = rsk_transform(m)?;
    let shift = crate::invariants::d_of_m(m)?;
    Ok((ladders, shift))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(b: i32, e: i32) -> Segment {
        Segment::new(b, e).unwrap()
    }

    fn ladder(s: &str) -> LadderMultisegment {
        Multisegment::parse(s).unwrap().as_ladder().unwrap()
    }

    fn parse(s: &str) -> Multisegment {
        Multisegment::parse(s).unwrap()
    }

    #[test]
    fn permissibility_examples() {
        // shifted [1,1] -> [0,0] precedes [1,2]
        assert!(is_permissible(&ladder("[1,2]"), &parse("[1,1]")));
        // shifted [2,2] -> [1,1] has equal begin with [1,3]
        assert!(!is_permissible(&ladder("[1,3]"), &parse("[2,2]")));
        // shifted [1,2] -> [0,1] precedes [2,3]
        assert!(is_permissible(&ladder("[2,3]"), &parse("[1,2]")));
        // zero body is vacuously permissible
        assert!(is_permissible(&ladder("[1,2]"), &Multisegment::zero()));
    }

    #[test]
    fn build_simple_pair() {
        let pair = build_permissible(&ladder("[1,2]"), &parse("[1,1]")).unwrap();
        assert_eq!(pair.depth(Part::Body(0)), 1);
        assert_eq!(pair.sharp(Part::Body(0)), Part::Ladder(0));
        assert_eq!(pair.sharp(Part::Ladder(0)), Part::Body(0));

        let pair = build_permissible(&ladder("[1,1]"), &parse("[1,1]")).unwrap();
        assert_eq!(pair.depth(Part::Body(0)), 1);
        assert_eq!(pair.sharp(Part::Body(0)), Part::Ladder(0));
    }

    #[test]
    fn build_with_empty_body() {
        let l = ladder("[2,3]+[1,2]");
        let pair = build_permissible(&l, &Multisegment::zero()).unwrap();
        for (pos, &s) in l.segments().iter().enumerate() {
            assert_eq!(pair.sharp(Part::Ladder(pos)), Part::Ladder(pos));
            assert_eq!(pair.club(Part::Ladder(pos)).unwrap(), s);
        }
        assert_eq!(pair.k_prime().unwrap(), l.to_multisegment());
    }

    #[test]
    fn build_rejects_non_permissible() {
        assert_eq!(
            build_permissible(&ladder("[1,3]"), &parse("[2,2]")),
            Err(Error::NotPermissible)
        );
    }

    #[test]
    fn k_prime_examples() {
        let pair = build_permissible(&ladder("[1,2]"), &parse("[1,1]")).unwrap();
        assert_eq!(pair.k_prime().unwrap(), parse("[1,1]+[1,2]"));

        let pair = build_permissible(&ladder("[1,1]"), &parse("[1,1]")).unwrap();
        assert_eq!(pair.k_prime().unwrap(), parse("2*[1,1]"));

        let pair = build_permissible(&ladder("[2,3]"), &parse("[1,2]")).unwrap();
        assert_eq!(pair.k_prime().unwrap(), parse("[1,3]+[2,2]"));
    }

    #[test]
    fn k_forward_examples() {
        let (l1, m1) = k_forward(&parse("[1,1]+[1,2]")).unwrap();
        assert_eq!(l1, ladder("[1,2]"));
        assert_eq!(m1, parse("[1,1]"));

        let (l1, m1) = k_forward(&parse("[1,3]+[2,2]")).unwrap();
        assert_eq!(l1, ladder("[2,3]"));
        assert_eq!(m1, parse("[1,2]"));

        let (l1, m1) = k_forward(&parse("[1,1]+[2,2]")).unwrap();
        assert_eq!(l1, ladder("[1,1]+[2,2]"));
        assert!(m1.is_zero());

        assert!(matches!(
            k_forward(&Multisegment::zero()),
            Err(Error::ZeroMultisegment)
        ));
    }

    #[test]
    fn transform_examples() {
        assert_eq!(
            rsk_transform(&parse("2*[1,1]")).unwrap(),
            vec![ladder("[1,1]"), ladder("[1,1]")]
        );
        assert_eq!(
            rsk_transform(&parse("[1,3]+[2,2]")).unwrap(),
            vec![ladder("[2,3]"), ladder("[1,2]")]
        );
        assert_eq!(
            rsk_transform(&parse("[1,2]+[2,3]")).unwrap(),
            vec![ladder("[2,3]+[1,2]")]
        );
    }

    #[test]
    fn tableaux_examples() {
        let t = tableaux(&parse("2*[1,1]")).unwrap();
        assert_eq!(t.shape, vec![1, 1]);
        assert_eq!(t.p, vec![vec![1], vec![1]]);
        assert_eq!(t.q, vec![vec![2], vec![2]]);
        assert_eq!(t.conjugate(), vec![2]);

        let t = tableaux(&parse("[1,3]+[2,2]")).unwrap();
        assert_eq!(t.shape, vec![1, 1]);
        assert_eq!(t.p, vec![vec![2], vec![1]]);
        assert_eq!(t.q, vec![vec![4], vec![3]]);

        let t = tableaux(&parse("[1,2]")).unwrap();
        assert_eq!(t.shape, vec![1]);
        assert_eq!(t.p, vec![vec![1]]);
        assert_eq!(t.q, vec![vec![3]]);
    }

    #[test]
    fn tableaux_row_ladders_match_transform() {
        let m = parse("[1,1]+[1,2]+[2,2]+[2,3]");
        let ladders = rsk_transform(&m).unwrap();
        let t = tableaux(&m).unwrap();
        for (i, l) in ladders.iter().enumerate() {
            assert_eq!(&t.row_ladder(i).unwrap(), l);
        }
    }

    #[test]
    fn gamma_descriptor_examples() {
        let (ladders, shift) = gamma_descriptor(&parse("2*[1,1]")).unwrap();
        assert_eq!(ladders, vec![ladder("[1,1]"), ladder("[1,1]")]);
        assert_eq!(shift, -1);

        let (ladders, shift) = gamma_descriptor(&parse("[1,2]+[2,3]")).unwrap();
        assert_eq!(ladders, vec![ladder("[1,2]+[2,3]")]);
        assert_eq!(shift, 0);

        let (ladders, shift) = gamma_descriptor(&parse("[1,3]+[2,2]")).unwrap();
        assert_eq!(ladders, vec![ladder("[2,3]"), ladder("[1,2]")]);
        assert_eq!(shift, -1);
    }

    #[test]
    fn depth_recursion_matches_chain_definition() {
        for (l, m) in [
            (ladder("[2,3]+[1,2]"), parse("[1,1]+[1,2]+[2,2]")),
            (ladder("[1,2]"), parse("2*[1,1]")),
            (ladder("[2,3]"), parse("[1,2]")),
        ] {
            if !is_permissible(&l, &m) {
                continue;
            }
            let pair = build_permissible(&l, &m).unwrap();
            let direct = depth_by_chains(&pair);
            for (i, &expected) in direct.iter().enumerate() {
                assert_eq!(pair.depth(Part::Body(i)), expected);
            }
        }
    }

    #[test]
    fn composed_end_points_never_shrink_on_body() {
        let pair = build_permissible(&ladder("[2,3]+[1,2]"), &parse("[1,1]+[2,2]")).unwrap();
        for part in pair.body_parts() {
            assert!(pair.club(part).unwrap().end() >= pair.segment(part).end());
        }
        for part in pair.ladder_parts() {
            assert!(pair.club(part).unwrap().end() <= pair.segment(part).end());
        }
    }

    #[test]
    fn seg_builder_guard() {
        assert!(Segment::new(3, 2).is_err());
        assert_eq!(seg(0, 0).height(), 1);
    }
}
