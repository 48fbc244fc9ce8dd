// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Execution model for priority algorithms: orders over requests, advice tapes,
// the algorithm interface and the presentation loop.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "priodpa/graph.hpp"
#include "priodpa/model.hpp"

namespace priodpa {

// Larger key = higher priority. Unused trailing slots stay zero.
using PriorityKey = std::array<std::int64_t, 4>;

// Strict total order on the requests of one graph. Built either from a key function
// (ties broken by smaller (x, y) first) or from a raw comparator, which is trusted
// only as far as max_of can verify it.
class PriorityOrder {
  public:
    using KeyFn = std::function<PriorityKey(const Request&)>;
    using HigherFn = std::function<bool(const Request&, const Request&)>;

    static PriorityOrder by_key(std::string name, KeyFn key);
    static PriorityOrder from_comparator(std::string name, HigherFn higher);

    // a ≻ b
    [[nodiscard]] bool higher(const Request& a, const Request& b) const;
    // Highest-priority element. Throws InvalidOrder if the comparator is not a strict
    // total order on `candidates`, std::invalid_argument if empty.
    [[nodiscard]] Request max_of(std::span<const Request> candidates) const;
    [[nodiscard]] const std::string& name() const { return name_; }

  private:
    PriorityOrder(std::string name, KeyFn key, HigherFn higher)
        : name_{std::move(name)}, key_{std::move(key)}, higher_{std::move(higher)} {}

    std::string name_;
    KeyFn key_;
    HigherFn higher_;
};

// Instance sorted strictly descending by priority.
[[nodiscard]] std::vector<Request> presentation_sequence(const PriorityOrder& order, std::span<const Request> requests);
[[nodiscard]] std::vector<Request> presentation_sequence(const PriorityOrder& order, const Instance& instance);

class AdviceTape {
  public:
    AdviceTape() = default;
    explicit AdviceTape(std::vector<bool> bits) : bits_{std::move(bits)} {}

    // Fixed-width field, most significant bit first.
    void append(std::uint64_t value, int width);
    [[nodiscard]] std::size_t size() const { return bits_.size(); }
    [[nodiscard]] bool bit(std::size_t i) const { return bits_.at(i); }
    [[nodiscard]] const std::vector<bool>& bits() const { return bits_; }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const AdviceTape&, const AdviceTape&) = default;

  private:
    std::vector<bool> bits_;
};

// Sequential reader; consumed() is the advice actually accessed.
class AdviceReader {
  public:
    AdviceReader() = default;
    explicit AdviceReader(const AdviceTape* tape) : tape_{tape} {}

    [[nodiscard]] std::uint64_t read(int width);
    [[nodiscard]] bool read_bit() { return read(1) != 0; }
    [[nodiscard]] std::size_t consumed() const { return cursor_; }
    [[nodiscard]] std::size_t remaining() const { return (tape_ ? tape_->size() : 0) - cursor_; }

  private:
    const AdviceTape* tape_ = nullptr;
    std::size_t cursor_ = 0;
};

enum class Verdict { reject, accept };

struct Decision {
    Request request;
    Verdict verdict = Verdict::reject;
    // Grids only; empty means the unique path on cycle-free graphs.
    std::vector<EdgeId> allocation;

    [[nodiscard]] bool accepted() const { return verdict == Verdict::accept; }
    friend bool operator==(const Decision&, const Decision&) = default;
};

// What an algorithm may observe while deciding: its own past decisions.
class RunState {
  public:
    explicit RunState(std::shared_ptr<const Graph> graph);

    [[nodiscard]] const Graph& graph() const { return *graph_; }
    [[nodiscard]] const EdgeSet& used_edges() const { return used_; }
    [[nodiscard]] const std::vector<Decision>& log() const { return log_; }
    [[nodiscard]] const Solution& solution() const { return solution_; }
    // Unique path of r is free (cycle-free graphs only).
    [[nodiscard]] bool blocked(const Request& r) const;
    [[nodiscard]] bool free(std::span<const EdgeId> edges) const;

    // Validates and records; throws IllegalAcceptance.
    void apply(const Decision& d);

  private:
    std::shared_ptr<const Graph> graph_;
    EdgeSet used_;
    std::vector<Decision> log_;
    Solution solution_;
};

class PriorityAlgorithm {
  public:
    virtual ~PriorityAlgorithm() = default;

    [[nodiscard]] virtual std::string name() const = 0;
    // Called once per run before any request. The tape is readable from here on.
    virtual void start(const Graph& graph, AdviceReader& advice) = 0;
    // Current order; adaptive algorithms may return a different one after each decide().
    [[nodiscard]] virtual const PriorityOrder& order() const = 0;
    [[nodiscard]] virtual Decision decide(const Request& request, const RunState& state, AdviceReader& advice) = 0;
};

// One algorithm on one graph, fed request by request.
class Session {
  public:
    Session(PriorityAlgorithm& alg, std::shared_ptr<const Graph> graph, const AdviceTape* tape = nullptr);

    [[nodiscard]] const PriorityOrder& order() const { return alg_->order(); }
    [[nodiscard]] Request max_of(std::span<const Request> candidates) const { return order().max_of(candidates); }
    const Decision& feed(const Request& request);
    [[nodiscard]] const RunState& state() const { return state_; }
    [[nodiscard]] std::size_t bits_consumed() const { return reader_.consumed(); }

  private:
    PriorityAlgorithm* alg_;
    RunState state_;
    AdviceReader reader_;
};

struct RunResult {
    Solution solution;
    std::vector<Decision> log;
    std::size_t bits_consumed = 0;
};

// Presents the instance in the algorithm's (possibly changing) order.
[[nodiscard]] RunResult run(PriorityAlgorithm& alg, const Instance& instance, const AdviceTape* tape = nullptr);

// Accepts every request whose unique path is still free. Cycle-free graphs.
class GreedyAlgorithm : public PriorityAlgorithm {
  public:
    using OrderFactory = std::function<PriorityOrder(const Graph&)>;

    GreedyAlgorithm(std::string name, OrderFactory make_order)
        : name_{std::move(name)}, make_order_{std::move(make_order)} {}

    [[nodiscard]] std::string name() const override { return name_; }
    void start(const Graph& graph, AdviceReader& advice) override;
    [[nodiscard]] const PriorityOrder& order() const override;
    [[nodiscard]] Decision decide(const Request& request, const RunState& state, AdviceReader& advice) override;

  private:
    std::string name_;
    OrderFactory make_order_;
    std::optional<PriorityOrder> order_;
};

} // namespace priodpa
