//! Independent oracles for the core maps.
//!
//! Everything here recomputes an answer through a route that shares no
//! code with the implementation being checked: exhaustive inversion for
//! the peeling step, backtracking over all injections for permissibility,
//! blind enumeration for Mackey counts, and a reversed peeling recursion
//! for ladder characters.

use rskq::characters::{ladder_char, GradedCharacter, LaurentPoly};
use rskq::invariants::lambda_tilde;
use rskq::multisegments::{multisegments_with_weight, LadderMultisegment, Multisegment, Segment};
use rskq::root_lattice::{RootVector, Word};
use rskq::rsk::{build_permissible, is_permissible, k_forward};
use rskq::verify::{build_grid_data, grid_ladders, grid_multisegments, GridSpec};

fn seg(b: i32, e: i32) -> Segment {
    Segment::new(b, e).unwrap()
}

fn small_spec() -> GridSpec {
    GridSpec {
        lo: 0,
        hi: 2,
        max_distinct: 3,
        max_mult: 2,
    }
}

/// Exhaustive inversion: the peeling step output is the unique permissible
/// pair composing back to the input.
#[test]
fn k_forward_matches_exhaustive_inversion() {
    let spec = small_spec();
    let ladders = grid_ladders(&spec);
    for m in grid_multisegments(&spec) {
        if m.size() > 4 {
            continue;
        }
        let mut found: Vec<(LadderMultisegment, Multisegment)> = Vec::new();
        for l in &ladders {
            let Some(residual_weight) = m.weight().checked_sub(&l.weight()) else {
                continue;
            };
            for m1 in multisegments_with_weight(&residual_weight) {
                if !is_permissible(l, &m1) {
                    continue;
                }
                let composed = build_permissible(l, &m1)
                    .and_then(|pair| pair.k_prime())
                    .expect("certified pair");
                if composed == m {
                    found.push((l.clone(), m1));
                }
            }
        }
        let direct = k_forward(&m).expect("nonzero");
        assert_eq!(found, vec![direct], "inversion candidates for {m}");
    }
}

/// Backtracking over all order-preserving injections of every chain.
fn permissible_by_backtracking(l: &LadderMultisegment, m: &Multisegment) -> bool {
    let body: Vec<Segment> = m.iter_segments().collect();
    let rungs = l.segments();
    let n = body.len();
    // all chain subsets, each tested against all injections
    'subsets: for mask in 0u32..(1 << n) {
        let mut chain: Vec<Segment> = (0..n)
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| body[i])
            .collect();
        chain.sort_by_key(|s| (std::cmp::Reverse(s.begin()), std::cmp::Reverse(s.end())));
        for w in chain.windows(2) {
            if !w[1].ladder_less(&w[0]) {
                continue 'subsets;
            }
        }
        if !injection_exists(&chain, rungs, 0) {
            return false;
        }
    }
    true
}

fn injection_exists(chain: &[Segment], rungs: &[Segment], min_pos: usize) -> bool {
    let Some((first, rest)) = chain.split_first() else {
        return true;
    };
    for pos in min_pos..rungs.len() {
        if first.left_shifted().precedes(&rungs[pos]) && injection_exists(rest, rungs, pos + 1) {
            return true;
        }
    }
    false
}

#[test]
fn permissibility_matches_backtracking_oracle() {
    let mut agree = 0usize;
    for spec in [
        small_spec(),
        GridSpec {
            lo: 0,
            hi: 3,
            max_distinct: 3,
            max_mult: 2,
        },
    ] {
        let ladders = grid_ladders(&spec);
        let msegs = grid_multisegments(&spec);
        for l in &ladders {
            for m in msegs.iter().filter(|m| m.size() <= 4) {
                assert_eq!(
                    is_permissible(l, m),
                    permissible_by_backtracking(l, m),
                    "permissibility of ({l}, {m})"
                );
                agree += 1;
            }
        }
    }
    assert!(agree > 10_000, "oracle sweep too small: {agree}");
}

/// Blind enumeration of Mackey matrices: try every entry bounded by the
/// total multiplicity and keep the ones with correct margins.
#[test]
fn mackey_counts_match_blind_enumeration() {
    let cases: Vec<(Vec<RootVector>, Vec<RootVector>)> = vec![
        (
            vec![
                RootVector::from_pairs([(0, 1), (1, 1)]),
                RootVector::simple(1),
            ],
            vec![RootVector::simple(0), RootVector::from_pairs([(1, 2)])],
        ),
        (
            vec![
                RootVector::from_pairs([(0, 2)]),
                RootVector::from_pairs([(0, 1)]),
            ],
            vec![
                RootVector::from_pairs([(0, 1)]),
                RootVector::from_pairs([(0, 2)]),
            ],
        ),
        (
            vec![seg(1, 2).weight(), seg(0, 1).weight()],
            vec![seg(0, 1).weight(), seg(1, 2).weight()],
        ),
        (
            vec![seg(0, 2).weight()],
            vec![
                RootVector::simple(2),
                RootVector::simple(1),
                RootVector::simple(0),
            ],
        ),
    ];
    for (betas, gammas) in cases {
        let fast = rskq::mackey::enumerate(&betas, &gammas).unwrap();
        let blind = blind_mackey_count(&betas, &gammas);
        assert_eq!(fast.len(), blind, "count for {betas:?} vs {gammas:?}");
    }
}

fn blind_mackey_count(betas: &[RootVector], gammas: &[RootVector]) -> usize {
    let total = betas.iter().fold(RootVector::zero(), |acc, b| acc.plus(b));
    let indices: Vec<i32> = total.iter().map(|(i, _)| i).collect();
    let k = betas.len();
    let l = gammas.len();
    let cells = k * l;
    // entries as per-index counts per cell, enumerated blindly
    let mut count = 0usize;
    let mut entry = vec![RootVector::zero(); cells];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        cell: usize,
        idx_pos: usize,
        indices: &[i32],
        total: &RootVector,
        entry: &mut Vec<RootVector>,
        betas: &[RootVector],
        gammas: &[RootVector],
        count: &mut usize,
    ) {
        let cells = entry.len();
        if idx_pos == indices.len() {
            let k = betas.len();
            let l = gammas.len();
            for (i, beta) in betas.iter().enumerate() {
                let sum = (0..l).fold(RootVector::zero(), |acc, j| acc.plus(&entry[i * l + j]));
                if &sum != beta {
                    return;
                }
            }
            for (j, gamma) in gammas.iter().enumerate() {
                let sum = (0..k).fold(RootVector::zero(), |acc, i| acc.plus(&entry[i * l + j]));
                if &sum != gamma {
                    return;
                }
            }
            *count += 1;
            return;
        }
        if cell == cells {
            rec(0, idx_pos + 1, indices, total, entry, betas, gammas, count);
            return;
        }
        let idx = indices[idx_pos];
        let cap = total.multiplicity(idx);
        for c in 0..=cap {
            let before = entry[cell].clone();
            entry[cell] = before.plus(&RootVector::from_pairs([(idx, c)]));
            rec(
                cell + 1,
                idx_pos,
                indices,
                total,
                entry,
                betas,
                gammas,
                count,
            );
            entry[cell] = before;
        }
    }
    rec(
        0, 0, &indices, &total, &mut entry, betas, gammas, &mut count,
    );
    count
}

/// Ladder characters again, by peeling the final letter off the bottom of
/// a row instead of the first letter off the top.
fn ladder_char_by_final_letter(lambda: &[i32], mu: &[i32]) -> GradedCharacter {
    fn words(lambda: &[i32], mu: &[i32]) -> Vec<Vec<i32>> {
        if lambda.iter().zip(mu).all(|(l, m)| l == m) {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for j in 0..lambda.len() {
            if lambda[j] == mu[j] {
                continue;
            }
            // increment the begin bound; the incremented vector must stay
            // strictly decreasing
            if j > 0 && lambda[j] + 1 >= lambda[j - 1] {
                continue;
            }
            let letter = lambda[j];
            let mut inner = lambda.to_vec();
            inner[j] += 1;
            for mut w in words(&inner, mu) {
                w.push(letter);
                out.push(w);
            }
        }
        out
    }
    let weight = lambda
        .iter()
        .zip(mu)
        .flat_map(|(&l, &m)| l..m)
        .fold(RootVector::zero(), |acc, i| {
            acc.plus(&RootVector::simple(i))
        });
    let mut ch = GradedCharacter::empty(weight);
    for w in words(lambda, mu) {
        ch.add_term(Word::new(w), LaurentPoly::one());
    }
    ch
}

#[test]
fn ladder_char_agrees_with_reversed_recursion() {
    let spec = GridSpec::default();
    for l in grid_ladders(&spec) {
        if l.weight().height() > 7 {
            continue;
        }
        let forward = ladder_char(&l);
        let reversed = ladder_char_by_final_letter(&l.lambda(), &l.mu());
        assert_eq!(forward, reversed, "ladder {l}");
    }
}

/// Head shifts recomputed against raw expanded-pair scans.
#[test]
fn lambda_tilde_matches_raw_pair_scan() {
    let data = build_grid_data(small_spec());
    for (l, m) in &data.pairs {
        let lt = lambda_tilde(l, m).unwrap();
        let mut juxtaposed = 0i64;
        for s in l.segments() {
            for t in m.iter_segments() {
                if s.begin() == t.end() + 1 {
                    juxtaposed += 1;
                }
            }
        }
        assert_eq!(lt, i64::from(m.size()) - juxtaposed, "pair ({l}, {m})");
    }
}

/// Equal body segments are indistinguishable to the certificate.
#[test]
fn equal_body_segments_share_certificate_data() {
    let data = build_grid_data(small_spec());
    for (l, m) in &data.pairs {
        let pair = build_permissible(l, m).unwrap();
        let body = pair.body();
        for i in 0..body.len() {
            for j in (i + 1)..body.len() {
                if body[i] == body[j] {
                    use rskq::rsk::Part;
                    assert_eq!(pair.depth(Part::Body(i)), pair.depth(Part::Body(j)));
                    assert_eq!(pair.depth_prime(i), pair.depth_prime(j));
                }
            }
        }
    }
}

mod properties {
    use super::*;
    use proptest::prelude::*;

    fn arb_root_vector() -> impl Strategy<Value = RootVector> {
        proptest::collection::btree_map(-3i32..5, 1u32..3, 0..4).prop_map(RootVector::from_pairs)
    }

    fn arb_segment() -> impl Strategy<Value = Segment> {
        (-2i32..4, 0i32..4).prop_map(|(b, len)| Segment::new(b, b + len).expect("b <= e"))
    }

    fn arb_multisegment() -> impl Strategy<Value = Multisegment> {
        proptest::collection::vec(arb_segment(), 1..5).prop_map(Multisegment::from_segments)
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        proptest::collection::vec(-1i32..3, 0..4).prop_map(Word::new)
    }

    proptest! {
        #[test]
        fn cone_order_is_a_partial_order(
            a in arb_root_vector(),
            b in arb_root_vector(),
            c in arb_root_vector(),
        ) {
            prop_assert!(a.leq(&a));
            if a.leq(&b) && b.leq(&a) {
                prop_assert_eq!(&a, &b);
            }
            if a.leq(&b) && b.leq(&c) {
                prop_assert!(a.leq(&c));
            }
        }

        #[test]
        fn form_is_symmetric(a in arb_root_vector(), b in arb_root_vector()) {
            use rskq::root_lattice::form_on_vectors;
            prop_assert_eq!(form_on_vectors(&a, &b), form_on_vectors(&b, &a));
        }

        #[test]
        fn parse_print_roundtrip(m in arb_multisegment()) {
            let printed = m.canonical_string();
            prop_assert_eq!(Multisegment::parse(&printed).unwrap(), m);
        }

        #[test]
        fn peeling_roundtrip_off_grid(m in arb_multisegment()) {
            // exercises negative root indices beyond the default window
            let (l, m1) = k_forward(&m).unwrap();
            let back = build_permissible(&l, &m1).unwrap().k_prime().unwrap();
            prop_assert_eq!(back, m);
        }

        #[test]
        fn shuffle_is_associative(u in arb_word(), v in arb_word(), w in arb_word()) {
            use rskq::characters::shuffle;
            let cu = GradedCharacter::from_word(u, LaurentPoly::one());
            let cv = GradedCharacter::from_word(v, LaurentPoly::one());
            let cw = GradedCharacter::from_word(w, LaurentPoly::one());
            let left = shuffle(&shuffle(&cu, &cv), &cw);
            let right = shuffle(&cu, &shuffle(&cv, &cw));
            prop_assert_eq!(left, right);
        }

        #[test]
        fn shuffle_counts_interleavings_at_q_one(u in arb_word(), v in arb_word()) {
            use rskq::characters::shuffle;
            fn binomial(n: u64, k: u64) -> u64 {
                (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
            }
            let cu = GradedCharacter::from_word(u.clone(), LaurentPoly::one());
            let cv = GradedCharacter::from_word(v.clone(), LaurentPoly::one());
            let prod = shuffle(&cu, &cv);
            let expect = binomial((u.len() + v.len()) as u64, u.len() as u64);
            prop_assert_eq!(prod.dimension_at_one() as u64, expect);
        }

        #[test]
        fn bar_involution_is_an_involution_on_duals(m in arb_multisegment()) {
            use rskq::characters::kr_char;
            if m.weight().height() <= 6 {
                let ch = kr_char(&m);
                prop_assert_eq!(ch.dual().dual(), ch);
            }
        }

        #[test]
        fn width_never_exceeds_size(m in arb_multisegment()) {
            let w = m.width().unwrap();
            prop_assert!(w >= 1 && w <= m.size());
        }
    }
}
