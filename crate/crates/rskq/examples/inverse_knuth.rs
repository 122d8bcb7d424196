//! Build the certificate of a permissible pair and apply the inverse map.
//!
//! Shows the two depth functions, the cycle permutation and the composed
//! segments that sum to the output multisegment.
//!
//! ```bash
//! cargo run -p rskq --example inverse_knuth
//! ```

use rskq::multisegments::Multisegment;
use rskq::rsk::{build_permissible, is_permissible, Part};

fn main() {
    let ladder = Multisegment::parse("[2,3]+[1,2]")
        .unwrap()
        .as_ladder()
        .unwrap();
    let body = Multisegment::parse("[1,1]+[2,2]").unwrap();
    println!("ladder         {ladder}");
    println!("body           {body}");
    assert!(is_permissible(&ladder, &body));

    let pair = build_permissible(&ladder, &body).unwrap();
    for (i, seg) in pair.body().iter().enumerate() {
        let part = Part::Body(i);
        println!(
            "body {} = {seg}: depth' {} depth {} sharp {:?} composed {}",
            i,
            pair.depth_prime(i),
            pair.depth(part),
            pair.sharp(part),
            pair.club(part).unwrap(),
        );
    }
    for part in pair.ladder_parts() {
        println!(
            "rung {:?} = {}: sharp {:?} composed {}",
            part,
            pair.segment(part),
            pair.sharp(part),
            pair.club(part).unwrap(),
        );
    }

    let composed = pair.k_prime().unwrap();
    println!("inverse image  {composed}");
}
