#include "h2cruise/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "h2cruise/errors.hpp"

namespace h2cruise {

std::string format_g12(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

namespace {

// commas/quotes/newlines are not expected in error text, but keep the file
// well-formed if they appear
std::string csv_escape(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string sweep_csv(const SweepResult& sweep) {
    std::ostringstream out;
    out << "cost_index,v_mps,v_kmh,t_f_s,fuel_kg,doc";
    if (!sweep.all_ok) out << ",error";
    out << "\n";
    for (const auto& row : sweep.rows) {
        out << format_g12(row.cost_index) << ',' << format_g12(row.v_initial)
            << ',' << format_g12(row.v_initial * 3.6) << ','
            << format_g12(row.pareto.t_f) << ','
            << format_g12(row.pareto.fuel_burned_kg) << ',' << format_g12(row.doc);
        if (!sweep.all_ok) out << ',' << csv_escape(row.error);
        out << "\n";
    }
    return out.str();
}

std::string solution_csv(double cost_index, const SpeedSolution& solution) {
    std::ostringstream out;
    out << "cost_index,v_mps,v_kmh,residual,j_w,hamiltonian\n";
    out << format_g12(cost_index) << ',' << format_g12(solution.v_opt) << ','
        << format_g12(solution.v_opt * 3.6) << ',' << format_g12(solution.residual)
        << ',' << format_g12(solution.j_w) << ','
        << format_g12(solution.hamiltonian_value) << "\n";
    return out.str();
}

std::string trajectory_csv(const std::vector<CruiseState>& samples,
                           std::size_t max_rows) {
    std::ostringstream out;
    out << "t_s,x_m,w_n,v_mps,j_w\n";
    if (samples.empty()) return out.str();
    const std::size_t stride = (samples.size() + max_rows - 1) / max_rows;
    for (std::size_t i = 0; i < samples.size(); i += stride) {
        const auto& s = samples[i];
        out << format_g12(s.t) << ',' << format_g12(s.x) << ',' << format_g12(s.w)
            << ',' << format_g12(s.v) << ',' << format_g12(s.j_w) << "\n";
    }
    const auto& last = samples.back();
    if ((samples.size() - 1) % stride != 0) {
        out << format_g12(last.t) << ',' << format_g12(last.x) << ','
            << format_g12(last.w) << ',' << format_g12(last.v) << ','
            << format_g12(last.j_w) << "\n";
    }
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(p.parent_path(), ec);
        if (ec) {
            throw Error("cannot create directory " + p.parent_path().string() +
                        ": " + ec.message());
        }
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw Error("write failed for " + path);
}

}  // namespace h2cruise
