#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace tropdiff::cmd {

// One CLI invocation's worth of output. The JSON document carries every number
// appearing in the text rendering (and usually more); the text is derived from
// the same data.
struct Report {
    nlohmann::json data;
    std::string text;
    int status = 0; // nonzero for semantic failure (paper example mismatch)
    std::vector<std::string> warnings;

    std::string json_text() const { return data.dump(2); }
};

Report run_val(const std::string& natset_text, const std::vector<std::uint32_t>& js);
Report run_trop(const std::string& poly_text, std::uint32_t trunc);
Report run_eval(const std::string& poly_text, std::uint32_t trunc, const std::vector<std::string>& set_texts);
Report run_solve(const std::vector<std::string>& gen_texts, std::uint32_t trunc, int depth, std::uint32_t t_max,
                 std::uint32_t p_max);
Report run_initial(const std::string& poly_text, std::uint32_t trunc, const std::vector<std::string>& set_texts,
                   bool hu_gao);
// Each part reads "alpha; monomial; polynomial".
Report run_lift(const std::vector<std::string>& part_texts, std::uint32_t trunc,
                const std::vector<std::string>& set_texts);
Report run_check_basis(const std::vector<std::string>& gen_texts, const std::vector<std::string>& ref_gen_texts,
                       std::uint32_t trunc, std::uint32_t depth, std::uint32_t t_max, std::uint32_t p_max);
// Each solution reads "series_1; ...; series_n".
Report run_theorem_pp(const std::vector<std::string>& gen_texts, const std::vector<std::string>& solution_texts,
                      std::uint32_t trunc, std::uint32_t depth, std::uint32_t product_depth, std::uint32_t t_max,
                      std::uint32_t p_max);
Report run_suppmin(const std::string& poly_text, std::uint32_t trunc, std::uint32_t k_max);
Report run_matroid_check(std::uint32_t r);
Report run_qab_audit(const std::vector<std::string>& gen_texts, std::uint32_t trunc, std::uint32_t r,
                     std::uint32_t depth, int a, int b);
Report run_denef(const std::string& phi2_text, std::uint32_t trunc);
Report run_paper_examples();

} // namespace tropdiff::cmd
