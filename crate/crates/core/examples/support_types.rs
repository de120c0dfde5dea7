//! Support types of scattered terms and the block profile of the rationals.

use ultraorder::gap::{sqrt_gap, GapRegistry};
use ultraorder::order::Order;
use ultraorder::stype::{dense_profile_sampled, s_iterate, s_of_term};
use ultraorder::term::{parse_order_term, OrderTerm};

fn main() -> ultraorder::Result<()> {
    for text in ["5", "w", "w + w", "z", "w * z", "w*"] {
        let t = parse_order_term(text)?;
        println!("s({text}) = {}", s_of_term(&t)?);
    }
    println!("s(s(w)) = {}", s_iterate(&OrderTerm::Omega, 2)?);

    let gaps = GapRegistry::from_specs(vec![sqrt_gap("sqrt2", 2), sqrt_gap("sqrt3", 3)]);
    let eta = Order::with_gaps(OrderTerm::Eta, gaps)?;
    let p = dense_profile_sampled(&eta, 6)?;
    for b in p.points.iter().chain(&p.gaps) {
        println!("{:<8} {}", b.locus, b.supports.join(" "));
    }
    println!("profile holds: {}", p.holds());
    Ok(())
}
