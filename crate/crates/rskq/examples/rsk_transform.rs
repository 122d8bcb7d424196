//! Peel a multisegment into ladders and read off its tableau pair.
//!
//! ```bash
//! cargo run -p rskq --example rsk_transform
//! ```

use rskq::multisegments::Multisegment;
use rskq::rsk::{compose_ladders, rsk_transform, tableaux};

fn main() {
    let m = Multisegment::parse("2*[1,1]+[1,3]+[2,2]").unwrap();
    println!("multisegment   {m}");
    println!("width          {}", m.width().unwrap());

    let ladders = rsk_transform(&m).unwrap();
    for (i, l) in ladders.iter().enumerate() {
        println!("ladder {}       {l}", i + 1);
    }

    let t = tableaux(&m).unwrap();
    println!("shape          {:?}", t.shape);
    println!("conjugate      {:?}", t.conjugate());
    for (name, rows) in [("P", &t.p), ("Q", &t.q)] {
        for (i, row) in rows.iter().enumerate() {
            println!("{name} row {}        {row:?}", i + 1);
        }
    }

    // composing the ladders back recovers the input
    let back = compose_ladders(&ladders).unwrap();
    println!("recomposed     {back}");
    assert_eq!(back, m);
}
