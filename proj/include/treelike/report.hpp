#pragma once

#include <string>
#include <vector>

#include "treelike/graph.hpp"
#include "treelike/half_int.hpp"

namespace treelike {

enum class Param { Delta, DeltaW, Rho, Mu, Tau, Sigma, Kappa, RhoMinus, RhoPlus };

inline const char* to_string(Param p) {
    switch (p) {
        case Param::Delta: return "delta";
        case Param::DeltaW: return "delta_w";
        case Param::Rho: return "rho";
        case Param::Mu: return "mu";
        case Param::Tau: return "tau";
        case Param::Sigma: return "sigma";
        case Param::Kappa: return "kappa";
        case Param::RhoMinus: return "rho_minus";
        case Param::RhoPlus: return "rho_plus";
    }
    return "unknown";
}

// A computed parameter together with the vertices realizing it. The witness
// layout depends on the parameter:
//   delta      (w, x, y, z)            the quadruple
//   delta_w    (w, x, y, z)            basepoint w, triple x, y, z
//   kappa      (u, v, a, b)            a, b in I(u,v), same layer from u
//   tau        (x, y, z, y', z')       y' in I(x,y), z' in I(x,z)
//   sigma      (w, x, y, z)            w in I(x,y), z the far corner
//   rho        (w, x, y, x_y, y_x)
struct ParamReport {
    Param parameter{};
    HalfInt value;
    std::vector<Vertex> witness;
    std::string algorithm;
};

}  // namespace treelike
