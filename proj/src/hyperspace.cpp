#include "ihs/hyperspace.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace ihs {

Hyperspace::Hyperspace(int relation_count, int size, std::vector<std::vector<int>> labels)
    : n_(relation_count), size_(size), labels_(std::move(labels)) {
    if (n_ < 1)
        throw std::invalid_argument("Hyperspace: relation count must be positive");
    if (size_ < 0)
        throw std::invalid_argument("Hyperspace: negative size");
    if (static_cast<int>(labels_.size()) != n_)
        throw std::invalid_argument("Hyperspace: expected one label row per relation");
    for (auto& row : labels_) {
        if (static_cast<int>(row.size()) != size_)
            throw std::invalid_argument("Hyperspace: label row size mismatch");
        // Renumber class ids in first-occurrence order.
        std::unordered_map<int, int> renumber;
        renumber.reserve(row.size());
        for (int& lab : row) {
            if (lab < 0)
                throw std::invalid_argument("Hyperspace: negative class label");
            auto [it, inserted] = renumber.try_emplace(lab, static_cast<int>(renumber.size()));
            lab = it->second;
        }
    }
    class_sizes_.resize(n_);
    for (int i = 0; i < n_; ++i) {
        for (int lab : labels_[i]) {
            if (lab >= static_cast<int>(class_sizes_[i].size()))
                class_sizes_[i].resize(lab + 1, 0);
            ++class_sizes_[i][lab];
        }
    }
}

void Hyperspace::check_relation(int relation) const {
    if (relation < 0 || relation >= n_)
        throw std::out_of_range("Hyperspace: relation index out of range");
}

void Hyperspace::check_element(int element) const {
    if (element < 0 || element >= size_)
        throw std::out_of_range("Hyperspace: element out of range");
}

std::vector<int> Hyperspace::class_of(int element, int relation) const {
    const int lab = label(relation, element);
    std::vector<int> out;
    for (int x = 0; x < size_; ++x)
        if (labels_[relation][x] == lab)
            out.push_back(x);
    return out;
}

std::vector<int> Hyperspace::total_intersection(int element) const {
    check_element(element);
    std::vector<int> out;
    for (int x = 0; x < size_; ++x) {
        bool all = true;
        for (int i = 0; i < n_ && all; ++i)
            all = labels_[i][x] == labels_[i][element];
        if (all)
            out.push_back(x);
    }
    return out;
}

bool is_grid_for(const Hyperspace& space, const SetSystem& profile, std::uint64_t bound) {
    if (profile.ground() != space.relation_count())
        throw std::invalid_argument("is_grid_for: profile ground set must equal the relation index set");
    for (Mask member : profile.members()) {
        const std::vector<int> rels = indices_from_mask(member);
        // Group elements by their label tuple over the member's relations.
        std::map<std::vector<int>, std::uint64_t> groups;
        std::vector<int> key(rels.size());
        for (int x = 0; x < space.size(); ++x) {
            for (std::size_t j = 0; j < rels.size(); ++j)
                key[j] = space.label(rels[j], x);
            if (++groups[key] > bound)
                return false;
        }
    }
    return true;
}

void validate_coloring(const Coloring& coloring, int relation_count, std::size_t carrier_size) {
    if (coloring.colors.size() != carrier_size)
        throw std::invalid_argument("coloring must be total on the carrier");
    for (int c : coloring.colors)
        if (c < 0 || c >= relation_count)
            throw std::invalid_argument("coloring uses a color outside the relation index set");
}

AcceptabilityReport is_acceptable(const Hyperspace& space, const Coloring& coloring) {
    validate_coloring(coloring, space.relation_count(), static_cast<std::size_t>(space.size()));
    AcceptabilityReport report;
    report.acceptable = true;
    report.max_count = 0;
    report.counts.assign(space.relation_count(), std::vector<std::uint64_t>(space.size(), 0));
    for (int i = 0; i < space.relation_count(); ++i) {
        std::vector<std::uint64_t> per_class(space.class_count(i), 0);
        for (int x = 0; x < space.size(); ++x)
            if (coloring.colors[x] == i)
                ++per_class[space.label(i, x)];
        for (int a = 0; a < space.size(); ++a) {
            report.counts[i][a] = per_class[space.label(i, a)];
            report.max_count = std::max(report.max_count, report.counts[i][a]);
        }
    }
    return report;
}

}  // namespace ihs
