//! Lists the supports of a few orders in increasing order and the interval
//! sets that decide membership of a token.

use ultraorder::order::Order;
use ultraorder::relations::Rel;
use ultraorder::support::{
    enumerate_supports, interval_membership, support_literal, IntervalSet, UltraToken,
};

fn main() -> ultraorder::Result<()> {
    for text in ["4", "w", "z", "w + w*"] {
        let o = Order::parse(text)?;
        let ss: Vec<String> = enumerate_supports(&o, 6)?
            .iter()
            .map(|s| support_literal(&o, s))
            .collect();
        println!("{text:<7} {}", ss.join("  "));
    }

    let w = Order::parse("w")?;
    let top = UltraToken::parse(&w, "L:top#a")?;
    let below_five = IntervalSet::from_segment(&w, Rel::Lt, &w.parse_cpos("elem:5")?)?;
    let cofinite = below_five.complement(&w)?;
    println!(
        "{} contains {}: {}",
        top.literal(&w),
        below_five.describe(&w),
        interval_membership(&w, &below_five, &top)?
    );
    println!(
        "{} contains {}: {}",
        top.literal(&w),
        cofinite.describe(&w),
        interval_membership(&w, &cofinite, &top)?
    );
    Ok(())
}
