#pragma once

#include <list>
#include <optional>
#include <vector>

#include "dcl/graph.hpp"
#include "dcl/recognition.hpp"

namespace dcl {

// A labeling under construction, kept as the sequence of vertices in label
// order. Inserting x right after u is the same as adding one to every label
// above f(u) and setting f(x) = f(u) + 1.
class InsertionState {
  public:
    explicit InsertionState(int order);

    // Label v with the largest label so far plus one.
    void append(int v);

    // x must be unlabeled and u labeled.
    void insert_after(int x, int u);

    bool is_labeled(int v) const;
    int labeled_count() const;

    // Labeled vertices in label order.
    std::vector<int> sequence() const;

    // Requires every vertex to be labeled.
    Labeling to_labeling() const;

  private:
    int order_;
    int labeled_ = 0;
    std::list<int> sequence_;
    std::vector<char> present_;
    std::vector<std::list<int>::iterator> where_;
};

struct LabelingResult {
    std::optional<Labeling> labeling;
    std::optional<ObstructionWitness> obstruction;
};

// Keep label order aligned with a decomposition's residual paths: components
// take consecutive label blocks in ascending order of smallest vertex id;
// within a component the path vertices go down first, then each apex slots in
// after the earlier of its two path neighbors (apexes in ascending id), then
// each leaf slots in right after its unique neighbor (leaves in descending
// id, so leaves sharing a neighbor end up in ascending label order).
Labeling build_labeling(const Graph& g, const Decomposition& dec);

// Full pipeline: decompose along the chosen route and build the labeling, or
// hand back the obstruction that rules one out.
LabelingResult label_graph(const Graph& g, Route route = Route::apexes);

// Specialized entry point for trees whose leaf removal leaves a path; rejects
// anything else with an input error naming the offending structure.
Labeling label_caterpillar(const Graph& g);

}  // namespace dcl
