//! Tabulates the four extended relations on tokens of `z`, once by the
//! support comparison and once by the defining double membership.

use ultraorder::harness::oracle_ext_rel;
use ultraorder::order::Order;
use ultraorder::relations::{ext_rel, reflexivity_kind, Rel};
use ultraorder::support::UltraToken;

fn main() -> ultraorder::Result<()> {
    let z = Order::parse("z")?;
    let tokens: Vec<UltraToken> = ["R:bottom#a", "R:bottom#b", "pt:0", "L:top#a", "L:top#b"]
        .iter()
        .map(|s| UltraToken::parse(&z, s))
        .collect::<Result<_, _>>()?;

    for rel in Rel::ALL {
        println!("{rel}");
        for u in &tokens {
            let mut row = String::new();
            for v in &tokens {
                let got = ext_rel(&z, rel, u, v)?;
                assert_eq!(got, oracle_ext_rel(&z, rel, u, v)?);
                row.push_str(if got { " 1" } else { " ." });
            }
            println!("  {:<12}{row}", u.literal(&z));
        }
    }
    for u in &tokens {
        println!("{:<12} {:?}", u.literal(&z), reflexivity_kind(u));
    }
    Ok(())
}
