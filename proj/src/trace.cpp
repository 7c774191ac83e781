#include "greedy/trace.hpp"

#include <json.hpp>

#include "greedy/io.hpp"

namespace greedy {

const char* to_string(Termination t) {
    switch (t) {
    case Termination::MaxIter:
        return "max_iter";
    case Termination::ResidualBelowAtol:
        return "residual_below_atol";
    case Termination::OrthogonalResidual:
        return "orthogonal_residual";
    case Termination::DependentAtom:
        return "dependent_atom";
    }
    return "max_iter";
}

double Trace::residual_at(std::size_t m) const {
    if (m == 0 || records.empty()) {
        return records.empty() ? initial_norm : (m == 0 ? initial_norm : records.back().residual_norm);
    }
    const std::size_t idx = (m <= records.size()) ? m - 1 : records.size() - 1;
    return records[idx].residual_norm;
}

std::string trace_to_csv(const Trace& trace) {
    std::string out = "iter,atom_index,sign,y,coeff,residual_norm\n";
    for (const auto& r : trace.records) {
        out += std::to_string(r.iter);
        out += ',';
        out += std::to_string(r.atom_index);
        out += ',';
        out += std::to_string(r.sign);
        out += ',';
        out += fmt_g17(r.y);
        out += ',';
        out += fmt_g17(r.coeff);
        out += ',';
        out += fmt_g17(r.residual_norm);
        out += '\n';
    }
    return out;
}

std::string trace_to_json(const Trace& trace) {
    nlohmann::ordered_json j;
    j["initial_norm"] = trace.initial_norm;
    j["termination"] = to_string(trace.termination);
    auto& items = j["iterations"] = nlohmann::ordered_json::array();
    for (const auto& r : trace.records) {
        nlohmann::ordered_json item;
        item["iter"] = r.iter;
        item["atom_index"] = r.atom_index;
        item["sign"] = r.sign;
        item["y"] = r.y;
        item["coeff"] = r.coeff;
        item["residual_norm"] = r.residual_norm;
        items.push_back(std::move(item));
    }
    return j.dump(2) + "\n";
}

} // namespace greedy
