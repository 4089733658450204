use slr_core::analysis::{barely_yamanouchi_sequence, barely_yamanouchi_tableau};
use slr_core::insertion::mixed_insert_word_into;
use slr_core::lr::enumerate_constructed;
use slr_core::oracles::coeff_by_monomials;
use slr_core::StrictPartition;

fn main() {
    let sp = |parts: &[u32]| StrictPartition::new(parts.to_vec()).unwrap();
    let (lambda, mu, nu) = (sp(&[8, 7, 4]), sp(&[4, 2]), sp(&[11, 9, 5]));
    let y_mu = barely_yamanouchi_sequence(&mu);
    let y_nu = barely_yamanouchi_tableau(&nu);
    println!("Y_nu = {}", y_nu.encode());
    for t in enumerate_constructed(&lambda, &mu, &nu) {
        let done = mixed_insert_word_into(t.tableau(), &y_mu);
        println!("[{}] {}", if done == y_nu { "ok " } else { "BAD" }, t.tableau().encode());
    }
    println!("monomial oracle says: {:?}", coeff_by_monomials(&lambda, &mu, &nu));
}
