use slr_core::lr::{coefficient, enumerate_constructed};
use slr_core::oracles::coeff_by_completion;
use slr_core::partition::strict_partitions_of;
use slr_core::StrictPartition;

fn main() {
    // Sweep small triples, find disagreements between the enumerator and the
    // completion oracle, print the smallest offenders with witnesses.
    let mut shown = 0;
    'outer: for size in 0..=8u32 {
        for nu in strict_partitions_of(size) {
            for a in 0..=size {
                for lambda in strict_partitions_of(a) {
                    for mu in strict_partitions_of(size - a) {
                        if !nu.contains(&mu) || !nu.contains(&lambda) {
                            continue;
                        }
                        let fast = coefficient(&lambda, &mu, &nu);
                        let slow = coeff_by_completion(&lambda, &mu, &nu);
                        if fast != slow {
                            println!("MISMATCH l={} m={} n={}: rule={} completion={}", lambda, mu, nu, fast, slow);
                            for t in enumerate_constructed(&lambda, &mu, &nu) {
                                use slr_core::analysis::barely_yamanouchi_sequence;
                                use slr_core::insertion::mixed_insert_word_into;
                                let done = mixed_insert_word_into(
                                    t.tableau(),
                                    &barely_yamanouchi_sequence(&mu),
                                );
                                let good = done == slr_core::analysis::barely_yamanouchi_tableau(&nu);
                                println!("  [{}] {}", if good { "ok " } else { "BAD" }, t.encode_labeled());
                            }
                            shown += 1;
                            if shown >= 6 {
                                break 'outer;
                            }
                        }
                    }
                }
            }
        }
    }
    if shown == 0 {
        println!("all small triples agree");
    }
    let sp = |parts: &[u32]| StrictPartition::new(parts.to_vec()).unwrap();
    println!("golden: rule={} completion={}",
        coefficient(&sp(&[8,7,4]), &sp(&[4,2]), &sp(&[11,9,5])),
        coeff_by_completion(&sp(&[8,7,4]), &sp(&[4,2]), &sp(&[11,9,5])));
}
