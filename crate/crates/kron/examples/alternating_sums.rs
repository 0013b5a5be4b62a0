//! Recovering an honest Kronecker coefficient from reduced ones: the
//! alternating sum over the chain of λ, its partial-sum sandwich, and the
//! same-size reformulation through row excision.
//!
//! Run with `cargo run --example alternating_sums`.

use num_bigint::BigInt;
use num_traits::Zero;

use kron::deligne::class_chain;
use kron::{kronecker, reduced_kronecker, Partition};

fn main() -> Result<(), kron::Error> {
    let lam: Partition = "1".parse()?;
    let mu: Partition = "1".parse()?;
    let tau: Partition = "1".parse()?;

    for n in 2..=5 {
        let g = kronecker(
            &lam.add_top_row(n)?,
            &mu.add_top_row(n)?,
            &tau.add_top_row(n)?,
        )?;

        // ḡ terms along the chain of λ, truncated once the size triangle
        // fails; then g = t_0 - t_1 + t_2 - ...
        let mut chain = class_chain(&lam, n, 0)?;
        let bound = mu.size() + tau.size();
        let mut terms = Vec::new();
        for i in 0.. {
            let element = chain.element(i).clone();
            if element.size() > bound {
                break;
            }
            terms.push(reduced_kronecker(&element, &mu, &tau));
        }

        let mut alternating = BigInt::zero();
        let mut partials = Vec::new();
        for (k, term) in terms.iter().enumerate() {
            if k % 2 == 0 {
                alternating += term;
            } else {
                alternating -= term;
            }
            partials.push(alternating.clone());
        }
        assert_eq!(g, alternating);

        let rendered: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
        println!("n = {n}: g = {g} from ḡ terms [{}]", rendered.join(", "));
        println!("       partial sums {partials:?} sandwich g (odd below, even above)");
    }

    // Same-size form: for λ, μ, τ all of size n, excise rows of λ and pair
    // with the top-row-stripped μ, τ.
    let n = 4usize;
    let lam: Partition = "2,1,1".parse()?;
    let mu: Partition = "2,2".parse()?;
    let tau: Partition = "3,1".parse()?;
    let (mu_bar, tau_bar) = (mu.remove_top_row(), tau.remove_top_row());
    let mut sum = BigInt::zero();
    let mut shown = Vec::new();
    for i in 1.. {
        let excised = lam.excise_row(i);
        if excised.size() > mu_bar.size() + tau_bar.size() {
            break;
        }
        let term = reduced_kronecker(&excised, &mu_bar, &tau_bar);
        shown.push(format!("ḡ^({excised}) = {term}"));
        if i % 2 == 1 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let g = kronecker(&lam, &mu, &tau)?;
    assert_eq!(g, sum);
    println!("\nsame-size form in S_{n}: g^({lam})_({mu}),({tau}) = {g}");
    println!("  via row excision: {}", shown.join(", "));
    Ok(())
}
