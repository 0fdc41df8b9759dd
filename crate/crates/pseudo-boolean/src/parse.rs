use crate::error::ParseError;
use crate::poly::BinaryPolynomial;

/// Parses the polynomial text format: one term per line as
/// `coeff * x_i [* x_j ...]`, a bare number for a constant contribution,
/// with blank lines and `#` comments ignored. Variable indices may be
/// written `x3` or `x_3`. A repeated index inside one term is rejected;
/// terms with the same variable set on different lines merge by addition.
pub fn parse_polynomial(text: &str) -> Result<BinaryPolynomial, ParseError> {
    let mut entries: Vec<(f64, Vec<usize>)> = Vec::new();
    let mut max_var: Option<usize> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut factors = content.split('*').map(str::trim);
        let coeff_text = factors.next().expect("split yields at least one piece");
        let coefficient: f64 = coeff_text.parse().map_err(|_| ParseError {
            line,
            message: format!("expected a numeric coefficient, found `{coeff_text}`"),
        })?;
        let mut variables = Vec::new();
        for factor in factors {
            let index = parse_variable(factor).ok_or_else(|| ParseError {
                line,
                message: format!("expected a variable like `x0` or `x_0`, found `{factor}`"),
            })?;
            if variables.contains(&index) {
                return Err(ParseError {
                    line,
                    message: format!("variable x{index} repeats within one term"),
                });
            }
            variables.push(index);
            max_var = Some(max_var.map_or(index, |m: usize| m.max(index)));
        }
        entries.push((coefficient, variables));
    }
    let num_vars = max_var.map_or(0, |m| m + 1);
    let mut poly = BinaryPolynomial::new(num_vars);
    for (coefficient, variables) in entries {
        poly.add_term(coefficient, &variables)
            .expect("indices bounded by max_var");
    }
    Ok(poly)
}

fn parse_variable(token: &str) -> Option<usize> {
    let rest = token.strip_prefix('x')?;
    let digits = rest.strip_prefix('_').unwrap_or(rest);
    if digits.is_empty() {
        return None;
    }
    digits.parse().ok()
}
