//! Script text for cross-checking a system in Singular.

use super::IdealBasis;

/// `ring <name>=0,(x0,...,xm),lp; ideal I=f0,...,fn;`
///
/// Generators are printed as stored, terms in descending monomial order, so
/// the text is identical across runs.
pub fn emit_singular(basis: &IdealBasis, ringname: &str) -> String {
    let vars: Vec<String> = (0..basis.nvars).map(|i| format!("x{i}")).collect();
    let gens: Vec<String> = basis.generators.iter().filter(|f| !f.is_zero()).map(|f| f.to_string()).collect();
    let ideal = if gens.is_empty() { "0".to_string() } else { gens.join(",") };
    format!("ring {ringname}=0,({}),lp; ideal I={ideal};", vars.join(","))
}
