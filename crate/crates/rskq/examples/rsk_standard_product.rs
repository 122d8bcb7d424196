//! The normalized transform product and its multiplicity-one marker.
//!
//! The shuffle of the transform's ladder characters, shifted by the
//! normalization constant, carries the simple head in degree zero: at a
//! marker word owned by the input multisegment alone, the normalized
//! product and the proper standard character agree.
//!
//! ```bash
//! cargo run -p rskq --example rsk_standard_product
//! ```

use rskq::characters::{dominant_word, gamma_char, kr_char};
use rskq::invariants::d_of_m;
use rskq::multisegments::Multisegment;
use rskq::rsk::rsk_transform;

fn main() {
    let m = Multisegment::parse("[1,3]+[2,2]").unwrap();
    println!("multisegment   {m}");
    for (i, l) in rsk_transform(&m).unwrap().iter().enumerate() {
        println!("ladder {}       {l}", i + 1);
    }
    println!("shift d        {}", d_of_m(&m).unwrap());

    let g = gamma_char(&m).unwrap();
    println!("normalized product character:");
    for (w, p) in g.terms() {
        println!("  {p} . {w}");
    }

    let kr = kr_char(&m);
    let w = dominant_word(&m).unwrap();
    println!("marker word    {w}");
    println!("kr coefficient {}", kr.coefficient(&w));
    println!("g  coefficient {}", g.coefficient(&w));
    assert_eq!(kr.coefficient(&w), g.coefficient(&w));
}
