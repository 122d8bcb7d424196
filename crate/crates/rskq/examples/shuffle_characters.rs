//! The quantum shuffle product and deconcatenation on graded characters.
//!
//! ```bash
//! cargo run -p rskq --example shuffle_characters
//! ```

use rskq::characters::{dominant_word, kr_char, restrict, segment_char, shuffle};
use rskq::multisegments::{Multisegment, Segment};
use rskq::root_lattice::RootVector;

fn main() {
    let a = segment_char(Segment::new(1, 1).unwrap());
    let b = segment_char(Segment::new(2, 2).unwrap());
    let prod = shuffle(&a, &b);
    println!("shuffle of (1) and (2):");
    for (w, p) in prod.terms() {
        println!("  {p} . {w}");
    }

    // deconcatenate into the swapped block weights
    let blocks = [RootVector::simple(2), RootVector::simple(1)];
    let res = restrict(&prod, &blocks);
    println!("restricted to (a2, a1):");
    for (words, p) in res.terms() {
        println!("  {p} . {} | {}", words[0], words[1]);
    }

    let m = Multisegment::parse("2*[1,1]+[2,2]").unwrap();
    let kr = kr_char(&m);
    println!("\nproper standard character of {m}:");
    for (w, p) in kr.terms() {
        println!("  {p} . {w}");
    }
    println!("dominant word  {}", dominant_word(&m).unwrap());
    println!("self-dual      {}", kr.is_self_dual());
    println!("dimension      {}", kr.dimension_at_one());
}
