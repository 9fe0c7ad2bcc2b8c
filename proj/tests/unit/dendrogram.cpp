#include <random>

#include "doctest.h"
#include "fgbetti/dendrogram.hpp"
#include "support/dendro_oracle.hpp"

using namespace fgb;
using namespace fgbtest;

namespace {

dendro_backend backends[] = {dendro_backend::fast, dendro_backend::naive};

} // namespace

TEST_SUITE("dendrogram") {
	TEST_CASE("basics") {
		for (dendro_backend b : backends) {
			dynamic_dendrogram dd(3, b);
			CHECK(dd.leaves() == 3);
			CHECK(dd.nodes() == 3);
			CHECK(dd.time_of_merge(0, 0).is_neg_inf());
			CHECK(dd.time_of_merge(0, 1).is_pos_inf());
			dd.merge_at_time(0, 1, scalar(4));
			CHECK(dd.time_of_merge(0, 1) == scalar(4));
			CHECK(dd.time_of_merge(1, 0) == scalar(4));
			CHECK(dd.time_of_merge(1, 2).is_pos_inf());
			dd.merge_at_time(1, 2, scalar(7));
			CHECK(dd.time_of_merge(0, 2) == scalar(7));
			CHECK(dd.nodes() == 5);
			CHECK(dd.check_heap_order());
		}
	}

	TEST_CASE("merging again at a lower time wins") {
		for (dendro_backend b : backends) {
			dynamic_dendrogram dd(2, b);
			dd.merge_at_time(0, 1, scalar(3));
			dd.merge_at_time(0, 1, scalar(1));
			CHECK(dd.time_of_merge(0, 1) == scalar(1));
			dd.merge_at_time(0, 1, scalar(2)); // no effect, already merged by 1
			CHECK(dd.time_of_merge(0, 1) == scalar(1));
			CHECK(dd.check_heap_order());
		}
	}

	TEST_CASE("lowering a merge reshapes existing clusters") {
		for (dendro_backend b : backends) {
			// chain 0-1 at 10, 2-3 at 20, then connect the clusters low
			dynamic_dendrogram dd(4, b);
			dd.merge_at_time(0, 1, scalar(10));
			dd.merge_at_time(2, 3, scalar(20));
			dd.merge_at_time(1, 2, scalar(5));
			CHECK(dd.time_of_merge(0, 1) == scalar(10));
			CHECK(dd.time_of_merge(1, 2) == scalar(5));
			CHECK(dd.time_of_merge(0, 2) == scalar(10));
			CHECK(dd.time_of_merge(0, 3) == scalar(20));
			CHECK(dd.time_of_merge(1, 3) == scalar(20));
			CHECK(dd.check_heap_order());
		}
	}

	TEST_CASE("argument validation") {
		CHECK_THROWS_AS(dynamic_dendrogram(-1), std::invalid_argument);
		dynamic_dendrogram dd(2);
		CHECK_THROWS_AS(dd.time_of_merge(0, 2), std::out_of_range);
		CHECK_THROWS_AS(dd.merge_at_time(-1, 0, scalar(1)), std::out_of_range);
		CHECK_THROWS_AS(dd.merge_at_time(0, 1, scalar::pos_inf()), std::invalid_argument);
		dd.merge_at_time(0, 1, scalar::neg_inf()); // permitted: merged from the start
		CHECK(dd.time_of_merge(0, 1).is_neg_inf());
	}

	TEST_CASE("self merges are inert") {
		for (dendro_backend b : backends) {
			dynamic_dendrogram dd(2, b);
			dd.merge_at_time(0, 0, scalar(1));
			CHECK(dd.time_of_merge(0, 0).is_neg_inf());
			CHECK(dd.time_of_merge(0, 1).is_pos_inf());
		}
	}

	TEST_CASE("dump lists every node with its parent and label") {
		dynamic_dendrogram dd(2, dendro_backend::naive);
		dd.merge_at_time(0, 1, scalar(5));
		std::string d = dd.dump();
		CHECK(d.find("-inf") != std::string::npos);
		CHECK(d.find("5") != std::string::npos);
		int lines = 0;
		for (char c : d)
			if (c == '\n') ++lines;
		CHECK(lines == dd.nodes());
	}

	TEST_CASE("ultrametric inequality on random instances") {
		std::mt19937_64 mt(2024);
		for (int rep = 0; rep < 20; ++rep) {
			int n = 3 + (int)(mt() % 10);
			dynamic_dendrogram dd(n, dendro_backend::fast);
			for (int k = 0; k < 3 * n; ++k)
				dd.merge_at_time((int)(mt() % n), (int)(mt() % n), scalar((long)(mt() % 30)));
			for (int u = 0; u < n; ++u)
				for (int v = 0; v < n; ++v)
					for (int w = 0; w < n; ++w)
						CHECK(dd.time_of_merge(u, w) <=
						      max(dd.time_of_merge(u, v), dd.time_of_merge(v, w)));
		}
	}

	TEST_CASE("differential: fast, naive and the union-find oracle agree") {
		std::mt19937_64 mt(99);
		for (int seq = 0; seq < 200; ++seq) {
			int n = 2 + (int)(mt() % 24);
			dynamic_dendrogram fast(n, dendro_backend::fast);
			dynamic_dendrogram naive(n, dendro_backend::naive);
			dendro_oracle oracle(n);
			int ops = 1 + (int)(mt() % 200);
			for (int k = 0; k < ops; ++k) {
				int u = (int)(mt() % n), v = (int)(mt() % n);
				if (mt() % 5 < 3) {
					scalar t((long)(mt() % 12)); // narrow range forces ties
					fast.merge_at_time(u, v, t);
					naive.merge_at_time(u, v, t);
					oracle.merge_at_time(u, v, t);
				} else {
					scalar a = fast.time_of_merge(u, v);
					scalar b = naive.time_of_merge(u, v);
					scalar c = oracle.time_of_merge(u, v);
					CHECK(a == b);
					CHECK(a == c);
				}
			}
			CHECK(fast.check_heap_order());
			CHECK(naive.check_heap_order());
		}
	}

	TEST_CASE("move semantics") {
		dynamic_dendrogram a(2);
		a.merge_at_time(0, 1, scalar(3));
		dynamic_dendrogram b = std::move(a);
		CHECK(b.time_of_merge(0, 1) == scalar(3));
		dynamic_dendrogram c(1);
		c = std::move(b);
		CHECK(c.time_of_merge(0, 1) == scalar(3));
	}
}
