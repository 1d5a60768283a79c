#include "toricdef/presets.hpp"

#include <stdexcept>

namespace toricdef {

namespace {

SingularityPresentation make_a1() {
    SingularityPresentation p;
    p.label = "a1";
    p.ring = Ring({"x", "y", "z"});
    p.weights = {1, 1, 1};
    p.generators = {Polynomial::parse(p.ring, "z^2 - x*y")};
    return p;
}

SingularityPresentation make_a2_like() {
    SingularityPresentation p;
    p.label = "a2-like";
    p.ring = Ring({"x", "y", "z"});
    p.weights = {3, 3, 2};
    p.generators = {Polynomial::parse(p.ring, "z^3 - x*y")};
    return p;
}

SingularityPresentation make_twisted_cubic_cone() {
    SingularityPresentation p;
    p.label = "twisted-cubic-cone";
    p.ring = Ring({"x", "y", "z", "w"});
    p.weights = {1, 1, 1, 1};
    p.generators = {Polynomial::parse(p.ring, "x*w - y*z"),
                    Polynomial::parse(p.ring, "y^2 - x*z"),
                    Polynomial::parse(p.ring, "z^2 - y*w")};
    p.matrices["psi"] = GradedMatrix::from_rows(p.ring, {{"x", "z", "y"},
                                                         {"-y", "-w", "-z"}});
    p.matrices["syzygy"] = GradedMatrix::from_rows(p.ring, {{"z", "y"},
                                                            {"w", "z"},
                                                            {"y", "x"}});
    p.matrices["jacobian"] = GradedMatrix::from_rows(p.ring, {{"w", "-z", "0"},
                                                              {"-z", "2*y", "-w"},
                                                              {"-y", "-x", "2*z"},
                                                              {"x", "0", "-y"}});
    return p;
}

SingularityPresentation make_sym3_cone() {
    SingularityPresentation p;
    p.label = "sym3-cone";
    p.ring = Ring({"s0", "s1", "s2", "s3"});
    p.weights = {1, 1, 1, 1};
    p.generators = {Polynomial::parse(p.ring, "s0*s2 - s1^2"),
                    Polynomial::parse(p.ring, "s1*s2 - s0*s3"),
                    Polynomial::parse(p.ring, "s1*s3 - s2^2")};
    p.matrices["alpha"] = GradedMatrix::from_rows(p.ring, {{"s3", "s2"},
                                                           {"s2", "s1"},
                                                           {"s1", "s0"}});
    p.matrices["beta"] = GradedMatrix::from_rows(p.ring, {{"s2", "-s3", "0"},
                                                          {"-2*s1", "s2", "s3"},
                                                          {"s0", "s1", "-2*s2"},
                                                          {"0", "-s0", "s1"}});
    p.matrices["gamma"] =
        GradedMatrix::from_rows(p.ring, {{"s0", "s1", "s2", "0", "0", "0"},
                                         {"-s1", "-s2", "-s3", "s0", "s1", "s2"},
                                         {"0", "0", "0", "-s1", "-s2", "-s3"}});
    return p;
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"a1", "a2-like", "twisted-cubic-cone", "sym3-cone"};
}

SingularityPresentation preset(const std::string& name) {
    if (name == "a1") return make_a1();
    if (name == "a2-like") return make_a2_like();
    if (name == "twisted-cubic-cone") return make_twisted_cubic_cone();
    if (name == "sym3-cone") return make_sym3_cone();
    throw std::invalid_argument("unknown preset '" + name + "'");
}

}  // namespace toricdef
