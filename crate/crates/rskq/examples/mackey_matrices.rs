//! Enumerate the matrices of a restriction-of-induction filtration and
//! check the resulting character identity on an instance.
//!
//! ```bash
//! cargo run -p rskq --example mackey_matrices
//! ```

use rskq::characters::{restrict, segment_char, shuffle, BlockCharacter, GradedCharacter};
use rskq::mackey;
use rskq::multisegments::Segment;
use rskq::root_lattice::{RootVector, Word};

fn main() {
    let beta1 = Segment::new(1, 2).unwrap().weight();
    let beta2 = RootVector::simple(2);
    let gammas = vec![
        RootVector::simple(2),
        beta1
            .plus(&beta2)
            .checked_sub(&RootVector::simple(2))
            .unwrap(),
    ];

    println!("row weights    ({beta1}, {beta2})");
    println!("column weights ({}, {})", gammas[0], gammas[1]);
    let deltas = mackey::enumerate(&[beta1, beta2], &gammas).unwrap();
    println!("{} matrices:", deltas.len());
    for delta in &deltas {
        let cells: Vec<String> = (0..2)
            .map(|i| {
                (0..2)
                    .map(|j| delta.entry(i, j).to_string())
                    .collect::<Vec<_>>()
                    .join(" | ")
            })
            .collect();
        println!(
            "  [{}] / [{}]  degree {}",
            cells[0],
            cells[1],
            delta.degree()
        );
    }

    // the filtration sums to the restricted shuffle character
    let ch1 = segment_char(Segment::new(1, 2).unwrap());
    let ch2 = segment_char(Segment::new(2, 2).unwrap());
    let lhs = restrict(&shuffle(&ch1, &ch2), &gammas);
    let mut rhs = BlockCharacter::empty(gammas.clone());
    for delta in &deltas {
        let row0: Vec<RootVector> = delta.row(0).cloned().collect();
        let row1: Vec<RootVector> = delta.row(1).cloned().collect();
        let r1 = restrict(&ch1, &row0);
        let r2 = restrict(&ch2, &row1);
        for (ut, p1) in r1.terms() {
            for (vt, p2) in r2.terms() {
                let blocks: Vec<GradedCharacter> = (0..2)
                    .map(|j| shuffle(&word_char(&ut[j]), &word_char(&vt[j])))
                    .collect();
                let outer = BlockCharacter::outer(&blocks);
                let factor = p1.mul(p2).times_monomial(delta.degree());
                for (words, p) in outer.terms() {
                    rhs.add_term(words.clone(), p.mul(&factor));
                }
            }
        }
    }
    println!("filtration matches restricted product: {}", lhs == rhs);
    assert_eq!(lhs, rhs);
}

fn word_char(w: &Word) -> GradedCharacter {
    GradedCharacter::from_word(w.clone(), rskq::characters::LaurentPoly::one())
}
