use crate::error::{Error, Result};
use crate::lattice::{avoids_dudu, split_returns, DyckPath, Step};
use crate::patterns::{contains, CayleyPattern};
use crate::seqcore::{has_flat_step, is_modasc, Word};

/// Maps `x ∈ Prim_{n+1}(312)` to a `dudu`-avoiding Dyck path of semilength `n`.
///
/// Writing `x = 1B_1 1B_2 ... 1B_k`, the first block contributes
/// `u phi(B_1 - 1) d` and every later block `u phi(1 B_i') d`, where `B_i'` is
/// `B_i` shifted down by `max(B_{i-1}) - 1`.
pub fn phi_312(x: &Word) -> Result<DyckPath> {
    if x.is_empty() {
        return Err(Error::EmptyWord);
    }
    if !is_modasc(x) || has_flat_step(x) {
        return Err(Error::NotInClass {
            object: x.to_string(),
            class: "Prim".into(),
        });
    }
    let y: CayleyPattern = "312".parse().expect("valid literal pattern");
    if contains(x, &y) {
        return Err(Error::ContainsPattern {
            object: x.to_string(),
            pattern: "312".into(),
        });
    }
    let mut steps = Vec::with_capacity(2 * (x.len() - 1));
    phi_into(x.entries(), &mut steps);
    Ok(DyckPath::from_steps_unchecked(steps))
}

fn phi_into(x: &[u32], out: &mut Vec<Step>) {
    if x.len() <= 1 {
        return;
    }
    let starts: Vec<usize> = (0..x.len()).filter(|&i| x[i] == 1).collect();
    let mut prev_max = 0;
    for (b, &s) in starts.iter().enumerate() {
        let end = starts.get(b + 1).copied().unwrap_or(x.len());
        let body = &x[s + 1..end];
        let sub: Vec<u32> = if b == 0 {
            body.iter().map(|v| v - 1).collect()
        } else {
            std::iter::once(1)
                .chain(body.iter().map(|v| v + 1 - prev_max))
                .collect()
        };
        out.push(Step::Up);
        phi_into(&sub, out);
        out.push(Step::Down);
        prev_max = body.iter().copied().max().unwrap_or(prev_max);
    }
}

/// Inverse of [`phi_312`]; the result has length `semilength(P) + 1`.
pub fn phi_inverse(p: &DyckPath) -> Result<Word> {
    if !avoids_dudu(p) {
        return Err(Error::InvalidPath {
            reason: format!("{p} contains dudu"),
        });
    }
    Ok(Word::from_vec_unchecked(phi_inverse_steps(p.steps())))
}

fn phi_inverse_steps(steps: &[Step]) -> Vec<u32> {
    if steps.is_empty() {
        return vec![1];
    }
    let mut x = Vec::with_capacity(steps.len() / 2 + 1);
    let mut prev_max = 0;
    for (i, q) in split_returns(steps).into_iter().enumerate() {
        let sub = phi_inverse_steps(q);
        let body: Vec<u32> = if i == 0 {
            sub.iter().map(|v| v + 1).collect()
        } else {
            sub[1..].iter().map(|v| v + prev_max - 1).collect()
        };
        x.push(1);
        x.extend_from_slice(&body);
        if let Some(&m) = body.iter().max() {
            prev_max = m;
        }
    }
    x
}
