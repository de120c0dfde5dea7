//! Parses a few order terms, normalizes them and walks their elements.

use ultraorder::order::Order;
use ultraorder::term::{normalize_term, parse_order_term};

fn main() -> ultraorder::Result<()> {
    for text in ["2 * w", "w * 2", "w + 3 + w*", "z * w", "1 + e + 1"] {
        let t = parse_order_term(text)?;
        let n = normalize_term(&t);
        let o = Order::new(n.clone())?;
        let sample: Vec<String> = o
            .sample_elements(4)?
            .iter()
            .map(|p| p.to_string())
            .collect();
        println!(
            "{text:<12} normal form {n:<14} least {:<5} greatest {:<5} sample [{}]",
            n.has_least(),
            n.has_greatest(),
            sample.join(", ")
        );
    }

    let o = Order::parse("w + z")?;
    let c = o.parse_cut("at:structgap:0|1")?;
    println!(
        "in w + z the cut {} is a gap: {}",
        o.cut_literal(&c),
        o.is_gap(&c)?
    );
    Ok(())
}
