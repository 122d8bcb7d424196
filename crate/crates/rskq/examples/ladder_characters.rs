//! Homogeneous ladder characters and their restriction rule.
//!
//! A ladder character is computed by peeling single letters off the tops
//! of its rows; the result is concentrated in degree zero. Restricting to
//! a two-block weight splits it as a sum over interleaving bound vectors,
//! which this example verifies on an instance.
//!
//! ```bash
//! cargo run -p rskq --example ladder_characters
//! ```

use rskq::characters::{ladder_char, ladder_char_presentation, restrict, BlockCharacter};
use rskq::multisegments::Multisegment;
use rskq::root_lattice::RootVector;

fn main() {
    let ladder = Multisegment::parse("[2,3]+[1,1]")
        .unwrap()
        .as_ladder()
        .unwrap();
    let ch = ladder_char(&ladder);
    println!("ladder         {ladder}");
    println!("lambda         {:?}", ladder.lambda());
    println!("mu             {:?}", ladder.mu());
    println!("words:");
    for (w, p) in ch.terms() {
        println!("  {p} . {w}");
    }
    assert!(ch.is_homogeneous_unit());
    assert!(ch.is_self_dual());

    // two-block restriction matches the sum over bound vectors
    let beta1 = RootVector::from_pairs([(3, 1)]);
    let beta2 = ch.weight().checked_sub(&beta1).unwrap();
    let lhs = restrict(&ch, &[beta1.clone(), beta2.clone()]);

    let (lambda, mu) = (ladder.lambda(), ladder.mu());
    let mut rhs = BlockCharacter::empty(vec![beta1.clone(), beta2]);
    // nu ranges over coordinatewise interpolations between lambda and mu
    for nu0 in lambda[0]..=mu[0] {
        for nu1 in lambda[1]..=mu[1] {
            if nu1 >= nu0 {
                continue;
            }
            let nu = [nu0, nu1];
            let top = ladder_char_presentation(&nu, &mu).unwrap();
            if top.weight() != &beta1 {
                continue;
            }
            let bottom = ladder_char_presentation(&lambda, &nu).unwrap();
            rhs = rhs.plus(&BlockCharacter::outer(&[top, bottom]));
        }
    }
    println!(
        "restriction to ({beta1}, rest) has {} terms; matches the bound-vector sum: {}",
        lhs.terms().count(),
        lhs == rhs
    );
    assert_eq!(lhs, rhs);
}
