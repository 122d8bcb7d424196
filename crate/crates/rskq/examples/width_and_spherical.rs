//! Width, ladder recognition, left-aligned decomposition and the spherical
//! multisegment of a weight.
//!
//! ```bash
//! cargo run -p rskq --example width_and_spherical
//! ```

use rskq::multisegments::{spherical_multisegment, Multisegment};
use rskq::root_lattice::RootVector;

fn main() {
    for input in ["[1,2]+[2,3]", "2*[1,1]", "[2,2]+[1,3]", "[0,1]+[1,2]+[2,3]"] {
        let m = Multisegment::parse(input).unwrap();
        let ladder = match m.as_ladder() {
            Some(l) => format!("ladder {l}"),
            None => "not a ladder".to_string(),
        };
        println!("{m}: width {} ({ladder})", m.width().unwrap());
    }

    let m = Multisegment::parse("2*[1,1]+[1,3]+[2,2]").unwrap();
    println!("\nleft-aligned decomposition of {m}:");
    for block in m.left_aligned_decomposition().unwrap() {
        println!("  begin {}: ends {:?}", block.begin, block.ends);
    }

    let beta = RootVector::from_pairs([(0, 1), (1, 2), (2, 1), (4, 1)]);
    let sph = spherical_multisegment(&beta).unwrap();
    println!("\nweight {beta}");
    println!("spherical multisegment {sph}");
    assert!(sph.is_pairwise_unlinked());
}
