#ifndef TRIHARMONIC_BUILTINS_HPP
#define TRIHARMONIC_BUILTINS_HPP

#include <optional>
#include <string>

#include "json_io.hpp"
#include "lamellar.hpp"
#include "phifun.hpp"

namespace triharmonic {
namespace builtins {

/// The reference worked example: the square of the pre-twist over the cyclic
/// algebra (coefficients c0 = 0, c1 = 0, c2 = e1).
inline PhiFunction<Rational> phi_squared() {
    const Element<Rational> zero{Rational(0), Rational(0), Rational(0)};
    const Element<Rational> e1{Rational(1), Rational(0), Rational(0)};
    return PhiFunction<Rational>::polynomial({zero, zero, e1});
}

/// Named specs shipped in the binary so reference runs need no hand-typed
/// JSON. Accepted prefixes: "paper:" and "builtin:".
inline std::optional<Json> builtin_spec(const std::string& name) {
    if (name == "cyclic-params") return jsonio::params_to_json(AlgebraParams<Rational>::cyclic());
    if (name == "eqA-matrix") return jsonio::affine_to_json(AffineMap<Rational>::reference());
    if (name == "phi2") return jsonio::phifun_to_json(phi_squared());
    if (name == "V-of-phi2")
        return jsonio::polyfield_to_json(lamellarize(expand(phi_squared())), /*lamellar=*/true);
    return std::nullopt;
}

/// Resolve a CLI spec argument: a built-in name ("paper:..." / "builtin:...")
/// or a JSON file path.
inline Json resolve_spec(const std::string& arg) {
    for (const char* prefix : {"paper:", "builtin:"}) {
        const std::string p(prefix);
        if (arg.rfind(p, 0) == 0) {
            const auto spec = builtin_spec(arg.substr(p.size()));
            if (!spec) throw BadInput("unknown built-in spec: " + arg);
            return *spec;
        }
    }
    if (!arg.empty() && arg.front() == '{') return jsonio::load_json_text(arg, "inline spec");
    return jsonio::load_json_file(arg);
}

} // namespace builtins
} // namespace triharmonic

#endif // TRIHARMONIC_BUILTINS_HPP
