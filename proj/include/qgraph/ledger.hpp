#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qgraph {

// Raised when a charge would push a label's Grover-iteration counter past its
// configured budget. Algorithms poll before each iteration, so in normal
// operation this never fires; it is the safety net the budget contract asks for.
class BudgetExhausted : public std::runtime_error {
public:
    explicit BudgetExhausted(const std::string& label)
        : std::runtime_error("grover budget exhausted for label " + label) {}
};

// Per-label query counters with three categories: classical oracle queries,
// Grover iterations (one iteration = one oracle call), and modeled queries
// (decision-tree cost model; never mixed into the simulated categories).
class QueryLedger {
public:
    using LabelId = int;

    LabelId label(std::string_view name);

    void charge_classical(LabelId id, uint64_t count = 1);
    void charge_grover(LabelId id, uint64_t count = 1);
    void charge_modeled(LabelId id, uint64_t count);
    void set_grover_budget(LabelId id, uint64_t budget);

    uint64_t classical(LabelId id) const { return counters_[id].classical; }
    uint64_t grover(LabelId id) const { return counters_[id].grover; }
    uint64_t modeled(LabelId id) const { return counters_[id].modeled; }
    uint64_t classical(std::string_view name) const;
    uint64_t grover(std::string_view name) const;
    uint64_t modeled(std::string_view name) const;

    uint64_t total_classical() const;
    uint64_t total_grover() const;
    uint64_t total_modeled() const;

    struct Row {
        std::string label;
        uint64_t classical = 0;
        uint64_t grover_iterations = 0;
        uint64_t modeled = 0;
    };
    std::vector<Row> snapshot() const;  // sorted by label name
    std::string to_csv() const;         // stable columns: label,classical,grover_iterations,modeled

private:
    struct Counters {
        uint64_t classical = 0;
        uint64_t grover = 0;
        uint64_t modeled = 0;
        std::optional<uint64_t> grover_budget;
    };
    std::vector<std::string> names_;
    std::vector<Counters> counters_;
    std::map<std::string, LabelId, std::less<>> index_;
};

}  // namespace qgraph
