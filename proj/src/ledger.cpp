#include "qgraph/ledger.hpp"

#include <sstream>

namespace qgraph {

QueryLedger::LabelId QueryLedger::label(std::string_view name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    const LabelId id = static_cast<LabelId>(names_.size());
    names_.emplace_back(name);
    counters_.emplace_back();
    index_.emplace(names_.back(), id);
    return id;
}

void QueryLedger::charge_classical(LabelId id, uint64_t count) {
    counters_[id].classical += count;
}

void QueryLedger::charge_grover(LabelId id, uint64_t count) {
    auto& c = counters_[id];
    if (c.grover_budget && c.grover + count > *c.grover_budget)
        throw BudgetExhausted(names_[id]);
    c.grover += count;
}

void QueryLedger::charge_modeled(LabelId id, uint64_t count) {
    counters_[id].modeled += count;
}

void QueryLedger::set_grover_budget(LabelId id, uint64_t budget) {
    counters_[id].grover_budget = budget;
}

uint64_t QueryLedger::classical(std::string_view name) const {
    auto it = index_.find(name);
    return it == index_.end() ? 0 : counters_[it->second].classical;
}

uint64_t QueryLedger::grover(std::string_view name) const {
    auto it = index_.find(name);
    return it == index_.end() ? 0 : counters_[it->second].grover;
}

uint64_t QueryLedger::modeled(std::string_view name) const {
    auto it = index_.find(name);
    return it == index_.end() ? 0 : counters_[it->second].modeled;
}

uint64_t QueryLedger::total_classical() const {
    uint64_t t = 0;
    for (const auto& c : counters_) t += c.classical;
    return t;
}

uint64_t QueryLedger::total_grover() const {
    uint64_t t = 0;
    for (const auto& c : counters_) t += c.grover;
    return t;
}

uint64_t QueryLedger::total_modeled() const {
    uint64_t t = 0;
    for (const auto& c : counters_) t += c.modeled;
    return t;
}

std::vector<QueryLedger::Row> QueryLedger::snapshot() const {
    std::vector<Row> rows;
    rows.reserve(index_.size());
    for (const auto& [name, id] : index_) {  // std::map iterates sorted
        const auto& c = counters_[id];
        rows.push_back({name, c.classical, c.grover, c.modeled});
    }
    return rows;
}

std::string QueryLedger::to_csv() const {
    std::ostringstream out;
    out << "label,classical,grover_iterations,modeled\n";
    for (const auto& r : snapshot())
        out << r.label << ',' << r.classical << ',' << r.grover_iterations << ',' << r.modeled << '\n';
    out << "total," << total_classical() << ',' << total_grover() << ',' << total_modeled() << '\n';
    return out.str();
}

}  // namespace qgraph
