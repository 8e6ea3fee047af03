#include "derange/json_io.hpp"

#include <sstream>

namespace derange {

using nlohmann::json;

json poly_to_json(const IntPoly& p) {
    json coeffs = json::array();
    for (const Int& c : p.coeffs()) coeffs.push_back(c.str());
    return json{{"var", "x"}, {"coeffs", std::move(coeffs)}};
}

IntPoly poly_from_json(const json& j) {
    std::vector<Int> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
    return IntPoly(std::move(coeffs));
}

std::string poly_to_csv(const IntPoly& p) {
    std::ostringstream os;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) os << k << "," << p.coeffs()[k] << "\n";
    return os.str();
}

json signed_permutation_to_json(const SignedPermutation& w) {
    return json(w.entries());
}

json permutation_to_json(const Permutation& p) {
    return json{{"ground", p.ground()}, {"values", p.values()}};
}

json permutation_seq_to_json(const PermutationSeq& seq) {
    json blocks = json::array();
    for (const Permutation& b : seq.blocks) blocks.push_back(b.values());
    return json{{"sigma0", permutation_to_json(seq.sigma0)}, {"blocks", std::move(blocks)}};
}

json shape_report_to_json(const ShapeReport& r) {
    json j;
    j["zero_polynomial"] = r.zero_polynomial;
    j["symmetric"] = r.symmetric;
    if (r.center_times_two) {
        int c = *r.center_times_two;
        j["center"] = c % 2 == 0 ? std::to_string(c / 2) : std::to_string(c) + "/2";
    } else {
        j["center"] = nullptr;
    }
    j["unimodal"] = r.unimodal;
    j["peaks"] = r.peaks;
    j["log_concave"] = r.log_concave;
    j["internal_zeros"] = r.internal_zeros;
    if (r.gamma_nonnegative) j["gamma_nonnegative"] = *r.gamma_nonnegative;
    else j["gamma_nonnegative"] = nullptr;
    if (r.real_rooted) j["real_rooted"] = *r.real_rooted;
    else j["real_rooted"] = nullptr;
    return j;
}

}  // namespace derange
