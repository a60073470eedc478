//! Tilt data of one character at one stability parameter.

use serde_json::{json, Value};
use stabkit::chow::P3;
use stabkit::numerics::Rational;
use stabkit::tilt::{
    delta_c0, in_region_v, in_tilt_heart_numeric, nu, tilt_triple, to_xieta, v_point, z_tilt,
    Slope, TiltParam, VPoint,
};

use super::Output;
use crate::character::Character;
use crate::error::{CliError, CliResult};
use crate::format;

fn slope_text(s: &Slope, float: bool) -> String {
    match s {
        Slope::Finite(x) => format::rat(x, float),
        Slope::PlusInfinity => "+inf".into(),
    }
}

pub fn run(c: &Character, alpha_sq: &Rational, beta: &Rational, float: bool) -> CliResult<Output> {
    if c.ch.variety() != P3 {
        return Err(CliError::Usage(format!(
            "tilt data needs a class on P3, got {}",
            c.ch.variety()
        )));
    }
    let p = TiltParam::new(alpha_sq.clone(), beta.clone())?;
    let r = |x: &Rational| format::rat(x, float);
    let t = tilt_triple(&c.ch, beta);
    let (re, im) = z_tilt(&c.ch, &p);
    let slope = nu(&c.ch, &p)?;
    let q = to_xieta(&p);
    let delta = delta_c0(&c.ch);
    let heart = in_tilt_heart_numeric(&c.ch, &p);
    let region = in_region_v(&p);
    let (point_text, point_json) = match v_point(&c.ch)? {
        VPoint::Finite { xi, eta } => (
            format!("({}, {})", r(&xi), r(&eta)),
            json!({ "xi": xi.to_string(), "eta": eta.to_string() }),
        ),
        VPoint::Infinite { slope: Some(m) } => (
            format!("at infinity, slope {}", r(&m)),
            json!({ "infinite_slope": m.to_string() }),
        ),
        VPoint::Infinite { slope: None } => (
            "at infinity, vertical".into(),
            json!({ "infinite_slope": Value::Null }),
        ),
    };
    let text = format!(
        "character {label}\nalpha^2 = {a}, beta = {b}\n(xi, eta) = ({xi}, {eta})\nch^beta_C0 = ({t0}, {t1}, {t2})\n\
         Z = {re} + i*{im}\nnu = {nu}\nv(E) = {point_text}\nDelta_C0 = {delta}\nZ in H or R<=0: {heart}\nin region V: {region}\n",
        label = c.label,
        a = r(alpha_sq),
        b = r(beta),
        xi = r(&q.xi),
        eta = r(&q.eta),
        t0 = r(&t[0]),
        t1 = r(&t[1]),
        t2 = r(&t[2]),
        re = r(&re),
        im = r(&im),
        nu = slope_text(&slope, float),
        delta = r(&delta),
    );
    let json = json!({
        "character": c.to_json(),
        "alpha_sq": alpha_sq.to_string(),
        "beta": beta.to_string(),
        "xi": q.xi.to_string(),
        "eta": q.eta.to_string(),
        "tilt_triple": t.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "z": [re.to_string(), im.to_string()],
        "nu": slope_text(&slope, false),
        "v_point": point_json,
        "delta_c0": delta.to_string(),
        "in_heart": heart,
        "in_region_v": region,
    });
    Ok(Output { text, json })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::builtin;
    use stabkit::numerics::rat;

    #[test]
    fn clifford_sheaf_data() {
        let out = run(&builtin("C1").unwrap(), &rat(1, 64), &rat(-5, 4), false).unwrap();
        assert_eq!(out.json["z"], json!(["-3/16", "2"]));
        assert_eq!(out.json["nu"], "3/32");
        assert_eq!(out.json["v_point"], json!({ "xi": "1/4", "eta": "1/32" }));
        assert!(run(&builtin("kappa1").unwrap(), &rat(1, 64), &rat(-5, 4), false).is_err());
        assert!(run(&builtin("C1").unwrap(), &rat(0, 1), &rat(-5, 4), false).is_err());
    }
}
