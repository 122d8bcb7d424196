//! The counting invariants of a permissible pair and the normalization
//! shift of a transform.
//!
//! ```bash
//! cargo run -p rskq --example graded_invariants
//! ```

use rskq::invariants::{
    c_count, d_of_m, d_of_m_tableau, is_normal_sequence, kappa, lambda_invariant, lambda_tilde,
    nu_sets,
};
use rskq::multisegments::Multisegment;
use rskq::rsk::{build_permissible, rsk_transform};

fn main() {
    let ladder = Multisegment::parse("[2,3]").unwrap().as_ladder().unwrap();
    let body = Multisegment::parse("[1,2]").unwrap();
    let pair = build_permissible(&ladder, &body).unwrap();

    let sets = nu_sets(&pair).unwrap();
    println!("pair           ({ladder}, {body})");
    println!(
        "C              {}",
        c_count(&ladder.to_multisegment(), &body)
    );
    println!(
        "nu sets        |nu1|={} |nu2|={} |nu3|={} so D={}",
        sets.nu1.len(),
        sets.nu2.len(),
        sets.nu3.len(),
        sets.d_count()
    );
    println!("kappa          {}", kappa(&pair).unwrap());
    println!("lambda~        {}", lambda_tilde(&ladder, &body).unwrap());
    println!(
        "lambda         {}",
        lambda_invariant(&ladder, &body).unwrap()
    );

    let m = Multisegment::parse("2*[1,1]+[1,3]+[2,2]").unwrap();
    println!("\nmultisegment   {m}");
    println!("d (formula)    {}", d_of_m(&m).unwrap());
    println!("d (tableau)    {}", d_of_m_tableau(&m).unwrap());
    let ladders = rsk_transform(&m).unwrap();
    println!("normal seq     {}", is_normal_sequence(&ladders).unwrap());
}
