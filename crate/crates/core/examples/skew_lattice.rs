//! Checks the skew lattice laws for the extended min and max on two small
//! universes and prints the quotient by equal supports.

use ultraorder::order::Order;
use ultraorder::skew::{check_axioms, ext_max, ext_min, quotient_lattice};
use ultraorder::support::UltraToken;

fn main() -> ultraorder::Result<()> {
    let cases = [
        (
            "z",
            vec![
                "R:bottom#a",
                "R:bottom#b",
                "pt:0",
                "pt:1",
                "L:top#a",
                "L:top#b",
            ],
        ),
        ("w", vec!["pt:0", "pt:3", "L:top#a", "L:top#b"]),
    ];
    for (text, lits) in cases {
        let o = Order::parse(text)?;
        let us: Vec<UltraToken> = lits
            .iter()
            .map(|s| UltraToken::parse(&o, s))
            .collect::<Result<_, _>>()?;
        let (a, b) = (&us[0], &us[1]);
        println!(
            "{text}: min({0}, {1}) = {2}, max({0}, {1}) = {3}",
            a.literal(&o),
            b.literal(&o),
            ext_min(&o, a, b)?.literal(&o),
            ext_max(&o, a, b)?.literal(&o)
        );
        println!("{}", check_axioms(&o, &us)?);
        let q = quotient_lattice(&o, &us)?;
        println!(
            "classes {:?}, isomorphic to the chain of supports: {}\n",
            q.class_literals(&o),
            q.is_isomorphic()
        );
    }
    Ok(())
}
