use super::monomial::MultiIndex;
use super::ops::poly_derivative;
use super::poly::ExpPoly;
use super::span::independent_subset;

/// Basis of `span{τ_y f : y ∈ ℝ^d}`.
///
/// Expanding `P_s(x+y)` in `y` shows the span is generated by the
/// functions `(∂^α P_s)(x) e^{⟨λ_s,x⟩}`; an independent subfamily is kept
/// and each element is scaled to leading coefficient 1 when that
/// coefficient is invertible.
pub fn translates_closure(f: &ExpPoly) -> Vec<ExpPoly> {
    let d = f.dim();
    let mut generators = Vec::new();
    for (lambda, poly) in f.components() {
        let bound = MultiIndex::new(
            (0..d)
                .map(|j| poly.keys().map(|a| a.exponents()[j]).max().unwrap_or(0))
                .collect(),
        );
        for alpha in MultiIndex::below(&bound) {
            let part = poly_derivative(poly, &alpha);
            if part.is_empty() {
                continue;
            }
            let mut g = ExpPoly::zero(d);
            for (a, c) in part {
                g.add_term(lambda.clone(), a, c);
            }
            generators.push(g);
        }
    }
    independent_subset(&generators)
        .into_iter()
        .map(|i| normalize_leading(&generators[i]))
        .collect()
}

fn normalize_leading(g: &ExpPoly) -> ExpPoly {
    let lead = g.atoms().max_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1))).map(|(_, _, c)| c.clone());
    match lead.and_then(|c| c.unit_inverse()) {
        Some(inv) => g.scale(&inv),
        None => g.clone(),
    }
}
