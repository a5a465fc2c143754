# distutils: language = c++
"""Compiled kernels: BFS row means, growth tracking, and the model loops.

Every routine mirrors its counterpart in ``_pure`` exactly -- same SplitMix64
stream, same accept/reject decisions, same floating-point evaluation order --
so both backends produce identical tapes and curve values for a given seed.
"""

from libcpp.vector cimport vector
from libc.math cimport pow as c_pow, sqrt as c_sqrt
from libc.stdint cimport int32_t, int64_t, uint8_t, uint64_t
from libc.string cimport memcpy

import numpy as np
cimport numpy as cnp

cnp.import_array()

cdef extern from *:
    """
    #include <stdint.h>
    static inline uint64_t wp_mulshift(uint64_t x, uint64_t n) {
        return (uint64_t)(((__uint128_t)x * (__uint128_t)n) >> 64);
    }
    """
    uint64_t wp_mulshift(uint64_t x, uint64_t n) nogil

cdef int64_t PAIR_TRY_CAP = 10000

cdef uint64_t GOLDEN = <uint64_t>0x9E3779B97F4A7C15
cdef uint64_t MIX1 = <uint64_t>0xBF58476D1CE4E5B9
cdef uint64_t MIX2 = <uint64_t>0x94D049BB133111EB
cdef uint64_t TOMBSTONE = <uint64_t>0xFFFFFFFFFFFFFFFF
cdef double INV_2_53 = 1.0 / 9007199254740992.0


# ---------------------------------------------------------------------------
# SplitMix64
# ---------------------------------------------------------------------------

cdef struct Rng:
    uint64_t state

cdef inline uint64_t rng_next(Rng* r) nogil:
    r.state = r.state + GOLDEN
    cdef uint64_t z = r.state
    z = (z ^ (z >> 30)) * MIX1
    z = (z ^ (z >> 27)) * MIX2
    return z ^ (z >> 31)

cdef inline double rng_double(Rng* r) nogil:
    return <double>(rng_next(r) >> 11) * INV_2_53

cdef inline uint64_t rng_below(Rng* r, uint64_t n) nogil:
    return wp_mulshift(rng_next(r), n)

cdef inline uint64_t mix_hash(uint64_t z) nogil:
    z = z + GOLDEN
    z = (z ^ (z >> 30)) * MIX1
    z = (z ^ (z >> 27)) * MIX2
    return z ^ (z >> 31)


# ---------------------------------------------------------------------------
# Open-addressing edge-key set (keys are (lo<<32)|hi, never 0)
# ---------------------------------------------------------------------------

cdef class _EdgeHash:
    cdef vector[uint64_t] table
    cdef uint64_t mask
    cdef size_t filled   # live keys + tombstones

    def __cinit__(self):
        self.table.assign(1024, <uint64_t>0)
        self.mask = 1023
        self.filled = 0

    cdef bint contains(self, uint64_t key):
        cdef uint64_t idx = mix_hash(key) & self.mask
        cdef uint64_t v
        while True:
            v = self.table[idx]
            if v == 0:
                return False
            if v == key:
                return True
            idx = (idx + 1) & self.mask

    cdef void insert(self, uint64_t key):
        # callers only insert keys known to be absent
        if 2 * (self.filled + 1) > self.table.size():
            self._rehash()
        cdef uint64_t idx = mix_hash(key) & self.mask
        cdef uint64_t v
        while True:
            v = self.table[idx]
            if v == 0 or v == TOMBSTONE:
                self.table[idx] = key
                if v == 0:
                    self.filled += 1
                return
            idx = (idx + 1) & self.mask

    cdef void erase(self, uint64_t key):
        cdef uint64_t idx = mix_hash(key) & self.mask
        cdef uint64_t v
        while True:
            v = self.table[idx]
            if v == 0:
                return
            if v == key:
                self.table[idx] = TOMBSTONE
                return
            idx = (idx + 1) & self.mask

    cdef void _rehash(self):
        cdef vector[uint64_t] old = self.table
        cdef size_t new_size = self.table.size() * 2
        self.table.assign(new_size, <uint64_t>0)
        self.mask = new_size - 1
        self.filled = 0
        cdef size_t i
        cdef uint64_t key, idx
        for i in range(old.size()):
            key = old[i]
            if key != 0 and key != TOMBSTONE:
                idx = mix_hash(key) & self.mask
                while self.table[idx] != 0:
                    idx = (idx + 1) & self.mask
                self.table[idx] = key
                self.filled += 1


cdef inline uint64_t edge_key(int64_t i, int64_t j) nogil:
    if i < j:
        return (<uint64_t>i << 32) | <uint64_t>j
    return (<uint64_t>j << 32) | <uint64_t>i


# ---------------------------------------------------------------------------
# Growth state and tape accumulator
# ---------------------------------------------------------------------------

cdef class _GrowState:
    cdef vector[int32_t] deg
    cdef vector[int32_t] endpoints
    cdef vector[int32_t] eu
    cdef vector[int32_t] ev
    cdef _EdgeHash edges

    def __cinit__(self):
        self.edges = _EdgeHash()

    cdef inline int64_t n(self):
        return <int64_t>self.deg.size()

    cdef inline int64_t e(self):
        return <int64_t>self.eu.size()

    cdef inline int32_t add_node(self):
        self.deg.push_back(0)
        return <int32_t>(self.deg.size() - 1)

    cdef void add_edge(self, int32_t i, int32_t j):
        self.edges.insert(edge_key(i, j))
        self.deg[i] += 1
        self.deg[j] += 1
        self.endpoints.push_back(i)
        self.endpoints.push_back(j)
        self.eu.push_back(i)
        self.ev.push_back(j)

    cdef inline bint has_edge(self, int32_t i, int32_t j):
        return self.edges.contains(edge_key(i, j))

    cdef void rewire(self, int64_t slot, int32_t kept, int32_t removed, int32_t tgt):
        self.edges.erase(edge_key(kept, removed))
        self.edges.insert(edge_key(kept, tgt))
        self.deg[removed] -= 1
        self.deg[tgt] += 1
        if self.eu[slot] == removed:
            self.eu[slot] = tgt
            self.endpoints[2 * slot] = tgt
        else:
            self.ev[slot] = tgt
            self.endpoints[2 * slot + 1] = tgt

    cdef inline int32_t draw_preferential(self, Rng* rng):
        return self.endpoints[rng_below(rng, self.endpoints.size())]


cdef class _CTape:
    cdef vector[uint8_t] kinds
    cdef vector[int64_t] ends
    cdef vector[int32_t] payload
    cdef vector[int64_t] rewire_slots

    cdef void node(self, int32_t* attachments, int64_t count):
        cdef int64_t k
        self.kinds.push_back(0)
        for k in range(count):
            self.payload.push_back(attachments[k])
        self.ends.push_back(<int64_t>self.payload.size())

    cdef void edge(self, int32_t i, int32_t j):
        self.kinds.push_back(1)
        self.payload.push_back(i)
        self.payload.push_back(j)
        self.ends.push_back(<int64_t>self.payload.size())

    cdef void rewire(self, int32_t kept, int32_t removed, int32_t tgt, int64_t slot):
        self.kinds.push_back(2)
        self.payload.push_back(kept)
        self.payload.push_back(removed)
        self.payload.push_back(tgt)
        self.ends.push_back(<int64_t>self.payload.size())
        self.rewire_slots.push_back(slot)

    cdef tuple arrays(self):
        cdef cnp.ndarray kinds_arr = np.empty(self.kinds.size(), dtype=np.uint8)
        cdef cnp.ndarray offsets_arr = np.zeros(self.kinds.size() + 1, dtype=np.int64)
        cdef cnp.ndarray payload_arr = np.empty(self.payload.size(), dtype=np.int32)
        cdef cnp.ndarray slots_arr = np.empty(self.rewire_slots.size(), dtype=np.int64)
        if self.kinds.size():
            memcpy(cnp.PyArray_DATA(kinds_arr), self.kinds.data(),
                   self.kinds.size() * sizeof(uint8_t))
            memcpy(<char*>cnp.PyArray_DATA(offsets_arr) + sizeof(int64_t),
                   self.ends.data(), self.ends.size() * sizeof(int64_t))
        if self.payload.size():
            memcpy(cnp.PyArray_DATA(payload_arr), self.payload.data(),
                   self.payload.size() * sizeof(int32_t))
        if self.rewire_slots.size():
            memcpy(cnp.PyArray_DATA(slots_arr), self.rewire_slots.data(),
                   self.rewire_slots.size() * sizeof(int64_t))
        return kinds_arr, offsets_arr, payload_arr, slots_arr


cdef void seed_chain(_GrowState st, _CTape tape, int64_t n0):
    cdef int32_t i
    cdef int32_t prev
    st.add_node()
    tape.node(NULL, 0)
    for i in range(1, <int32_t>n0):
        st.add_node()
        prev = i - 1
        tape.node(&prev, 1)
        st.add_edge(i, prev)


cdef bint draw_nonedge_pair(_GrowState st, Rng* rng, int32_t* out_i, int32_t* out_j):
    cdef int64_t n = st.n()
    cdef int32_t i, j
    cdef int64_t tries
    if st.e() >= n * (n - 1) // 2:
        return False
    for tries in range(PAIR_TRY_CAP):
        i = st.draw_preferential(rng)
        j = st.draw_preferential(rng)
        if i != j and not st.has_edge(i, j):
            out_i[0] = i
            out_j[0] = j
            return True
    return False


cdef void draw_distinct_targets(_GrowState st, Rng* rng, int64_t m,
                                vector[int32_t]& targets):
    cdef int32_t cand
    cdef size_t k
    cdef bint dup
    while <int64_t>targets.size() < m:
        cand = st.draw_preferential(rng)
        dup = False
        for k in range(targets.size()):
            if targets[k] == cand:
                dup = True
                break
        if not dup:
            targets.push_back(cand)

cdef inline int64_t bernoulli(Rng* rng, double p) nogil:
    return 1 if rng_double(rng) < p else 0


# ---------------------------------------------------------------------------
# Growth models
# ---------------------------------------------------------------------------

def dm_grow(long long n0, long long m, double c0, double alpha,
            double r0, double rho, long long steps, unsigned long long seed):
    cdef Rng rng
    rng.state = seed
    cdef _GrowState st = _GrowState()
    cdef _CTape tape = _CTape()
    seed_chain(st, tape, n0)
    cdef int64_t intra_req = 0, intra_skip = 0, rew_req = 0, rew_skip = 0
    cdef int64_t t, want, w, rwant
    cdef double cf, rf
    cdef int32_t nid, pi, pj
    cdef vector[int32_t] targets
    cdef size_t k

    for t in range(1, steps + 1):
        targets.clear()
        draw_distinct_targets(st, &rng, m, targets)
        nid = st.add_node()
        tape.node(targets.data(), <int64_t>targets.size())
        for k in range(targets.size()):
            st.add_edge(nid, targets[k])

        cf = c0 * c_pow(<double>t, alpha)
        want = <int64_t>cf + bernoulli(&rng, cf - <double><int64_t>cf)
        for w in range(want):
            intra_req += 1
            if draw_nonedge_pair(st, &rng, &pi, &pj):
                st.add_edge(pi, pj)
                tape.edge(pi, pj)
            else:
                intra_skip += 1

        if r0 > 0.0:
            rf = r0 * c_pow(<double>t, rho)
            rwant = <int64_t>rf + bernoulli(&rng, rf - <double><int64_t>rf)
            for w in range(rwant):
                rew_req += 1
                if not try_rewire(st, tape, &rng):
                    rew_skip += 1

    arrays = tape.arrays()
    stats = (st.n(), st.e(), intra_req, intra_skip, rew_req, rew_skip, steps)
    return arrays[0], arrays[1], arrays[2], arrays[3], stats


cdef bint try_rewire(_GrowState st, _CTape tape, Rng* rng):
    cdef int64_t slot = <int64_t>rng_below(rng, st.e())
    cdef uint64_t side = rng_below(rng, 2)
    cdef int32_t u = st.eu[slot], v = st.ev[slot]
    cdef int32_t kept = u if side == 0 else v
    cdef int32_t removed = v if side == 0 else u
    cdef int32_t tgt
    cdef int64_t tries
    for tries in range(PAIR_TRY_CAP):
        tgt = st.draw_preferential(rng)
        if tgt != kept and not st.has_edge(kept, tgt):
            st.rewire(slot, kept, removed, tgt)
            tape.rewire(kept, removed, tgt, slot)
            return True
    return False


def sh_grow(long long n0, double p0, double mu, double c1, double eta,
            long long nonlinear, long long steps, long long stop_at_n,
            unsigned long long seed):
    cdef Rng rng
    rng.state = seed
    cdef _GrowState st = _GrowState()
    cdef _CTape tape = _CTape()
    seed_chain(st, tape, n0)
    cdef int64_t skipped = 0, steps_run = 0
    cdef int64_t t, tries, found, idx, node_count
    cdef int32_t tgt, nid, latest
    cdef double p, xi, total, u01
    cdef vector[double] cum
    cdef size_t ci

    if not (stop_at_n and st.n() >= stop_at_n) and steps >= 1:
        tgt = <int32_t>rng_below(&rng, n0)
        nid = st.add_node()
        tape.node(&tgt, 1)
        st.add_edge(nid, tgt)
        latest = nid
        steps_run = 1

        for t in range(2, steps + 1):
            if stop_at_n and st.n() >= stop_at_n:
                break
            p = p0 * c_pow(<double>t, -mu)
            if p > 1.0:
                p = 1.0
            if rng_double(&rng) < p:
                nid = st.add_node()
                tape.node(&latest, 1)
                st.add_edge(nid, latest)
                latest = nid
            else:
                found = -1
                node_count = st.n()
                if nonlinear:
                    xi = c1 * c_pow(<double>t, -eta)
                    cum.clear()
                    total = 0.0
                    for ci in range(st.deg.size()):
                        if st.deg[ci] > 0:
                            total += c_pow(<double>st.deg[ci], xi)
                        cum.push_back(total)
                    for tries in range(PAIR_TRY_CAP):
                        u01 = rng_double(&rng) * total
                        idx = upper_bound_double(cum, u01)
                        if idx >= node_count:
                            idx = node_count - 1
                        if idx != latest and not st.has_edge(latest, <int32_t>idx):
                            found = idx
                            break
                else:
                    for tries in range(PAIR_TRY_CAP):
                        idx = st.draw_preferential(&rng)
                        if idx != latest and not st.has_edge(latest, <int32_t>idx):
                            found = idx
                            break
                if found >= 0:
                    st.add_edge(latest, <int32_t>found)
                    tape.edge(latest, <int32_t>found)
                    latest = <int32_t>found
                else:
                    skipped += 1
            steps_run = t

    arrays = tape.arrays()
    stats = (st.n(), st.e(), skipped, steps_run)
    return arrays[0], arrays[1], arrays[2], arrays[3], stats


cdef int64_t upper_bound_double(vector[double]& cum, double u) nogil:
    cdef int64_t lo = 0, hi = <int64_t>cum.size(), mid
    while lo < hi:
        mid = (lo + hi) // 2
        if u < cum[mid]:
            hi = mid
        else:
            lo = mid + 1
    return lo


def hybrid_grow(long long n0, long long m, double c0, double alpha,
                double p0, double mu, long long steps, unsigned long long seed):
    cdef Rng rng
    rng.state = seed
    cdef _GrowState st = _GrowState()
    cdef _CTape tape = _CTape()
    seed_chain(st, tape, n0)
    cdef int64_t intra_req = 0, intra_skip = 0
    cdef int64_t t, want, w
    cdef double p, cf
    cdef int32_t nid, last_added = <int32_t>(n0 - 1), pi, pj
    cdef bint pending_close = False
    cdef vector[int32_t] targets
    cdef size_t k

    for t in range(1, steps + 1):
        p = p0 * c_pow(<double>t, -mu)
        if p > 1.0:
            p = 1.0
        if rng_double(&rng) < p:
            nid = st.add_node()
            tape.node(&last_added, 1)
            st.add_edge(nid, last_added)
            last_added = nid
            pending_close = True
        else:
            targets.clear()
            if pending_close:
                targets.push_back(last_added)
            draw_distinct_targets(st, &rng, m, targets)
            nid = st.add_node()
            tape.node(targets.data(), <int64_t>targets.size())
            for k in range(targets.size()):
                st.add_edge(nid, targets[k])
            last_added = nid
            pending_close = False

            cf = c0 * c_pow(<double>t, alpha)
            want = <int64_t>cf + bernoulli(&rng, cf - <double><int64_t>cf)
            for w in range(want):
                intra_req += 1
                if draw_nonedge_pair(st, &rng, &pi, &pj):
                    st.add_edge(pi, pj)
                    tape.edge(pi, pj)
                else:
                    intra_skip += 1

    arrays = tape.arrays()
    stats = (st.n(), st.e(), intra_req, intra_skip, steps)
    return arrays[0], arrays[1], arrays[2], arrays[3], stats


# ---------------------------------------------------------------------------
# BFS / ASPL
# ---------------------------------------------------------------------------

cdef bint bfs_rowsum(int64_t* indptr, int32_t* indices, int64_t n,
                     int32_t source, int32_t* dist, int32_t* queue,
                     int64_t* rowsum_out) nogil:
    cdef int64_t head = 0, tail = 0, reached = 1, rowsum = 0
    cdef int32_t u, w
    cdef int64_t k
    cdef int32_t du
    for k in range(n):
        dist[k] = -1
    dist[source] = 0
    queue[0] = source
    tail = 1
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u]
        for k in range(indptr[u], indptr[u + 1]):
            w = indices[k]
            if dist[w] < 0:
                dist[w] = du + 1
                rowsum += du + 1
                queue[tail] = w
                tail += 1
                reached += 1
    rowsum_out[0] = rowsum
    return reached == n


def bfs_rowmeans(cnp.int64_t[::1] indptr, cnp.int32_t[::1] indices,
                 cnp.int64_t[::1] sources):
    """(rowmeans, all_reached); row mean = sum of distances / (N-1)."""
    cdef int64_t n = indptr.shape[0] - 1
    cdef int64_t n_src = sources.shape[0]
    cdef cnp.ndarray out = np.empty(n_src, dtype=np.float64)
    cdef double* out_p = <double*>cnp.PyArray_DATA(out)
    cdef vector[int32_t] dist
    cdef vector[int32_t] queue
    dist.resize(n)
    queue.resize(n)
    cdef int64_t si, rowsum
    cdef bint ok = True
    for si in range(n_src):
        if not bfs_rowsum(&indptr[0], &indices[0], n, <int32_t>sources[si],
                          dist.data(), queue.data(), &rowsum):
            ok = False
            break
        out_p[si] = <double>rowsum / <double>(n - 1)
    return out, bool(ok)


cdef void reduce_mean_sem(double* vals, int64_t count, bint sampled,
                          double* mean_out, double* sem_out) nogil:
    cdef double total = 0.0, ss = 0.0, d
    cdef int64_t i
    for i in range(count):
        total += vals[i]
    cdef double mean = total / <double>count
    mean_out[0] = mean
    if not sampled or count < 2:
        sem_out[0] = 0.0
        return
    for i in range(count):
        d = vals[i] - mean
        ss += d * d
    sem_out[0] = c_sqrt(ss / <double>(count - 1) / <double>count)


def track_aspl(cnp.uint8_t[::1] kinds, cnp.int64_t[::1] offsets,
               cnp.int32_t[::1] payload, cnp.int64_t[::1] rewire_slots,
               cnp.int64_t[::1] checkpoints, long long exact_threshold,
               long long n_sources, unsigned long long seed):
    """Walk a tape, measuring ASPL at node events that hit checkpoints."""
    cdef int64_t n_events = kinds.shape[0]
    cdef int64_t n_cp = checkpoints.shape[0]
    cdef vector[int32_t] deg
    cdef vector[int32_t] eu
    cdef vector[int32_t] ev
    cdef vector[int64_t] out_n
    cdef vector[double] out_l
    cdef vector[double] out_err
    cdef vector[uint8_t] out_mode

    cdef int64_t cp_idx = 0, r_idx = 0, n_nodes = 0
    cdef int64_t idx, lo, hi, k, slot
    cdef int32_t nid, i, j, kept, removed, tgt
    cdef uint8_t kind
    cdef double length, err
    cdef int sampled
    cdef bint ok = True

    for idx in range(n_events):
        kind = kinds[idx]
        lo = offsets[idx]
        hi = offsets[idx + 1]
        if kind == 0:
            nid = <int32_t>n_nodes
            deg.push_back(0)
            n_nodes += 1
            for k in range(lo, hi):
                i = payload[k]
                eu.push_back(nid)
                ev.push_back(i)
                deg[nid] += 1
                deg[i] += 1
            while cp_idx < n_cp and checkpoints[cp_idx] < n_nodes:
                cp_idx += 1
            if cp_idx < n_cp and checkpoints[cp_idx] == n_nodes:
                cp_idx += 1
                if not measure_checkpoint(n_nodes, deg, eu, ev,
                                          exact_threshold, n_sources, seed,
                                          &length, &err, &sampled):
                    ok = False
                    break
                out_n.push_back(n_nodes)
                out_l.push_back(length)
                out_err.push_back(err)
                out_mode.push_back(<uint8_t>sampled)
        elif kind == 1:
            i = payload[lo]
            j = payload[lo + 1]
            eu.push_back(i)
            ev.push_back(j)
            deg[i] += 1
            deg[j] += 1
        else:
            kept = payload[lo]
            removed = payload[lo + 1]
            tgt = payload[lo + 2]
            slot = rewire_slots[r_idx]
            r_idx += 1
            if eu[slot] == removed:
                eu[slot] = tgt
            else:
                ev[slot] = tgt
            deg[removed] -= 1
            deg[tgt] += 1

    ns_arr = np.empty(out_n.size(), dtype=np.int64)
    ls_arr = np.empty(out_l.size(), dtype=np.float64)
    err_arr = np.empty(out_err.size(), dtype=np.float64)
    mode_arr = np.empty(out_mode.size(), dtype=np.uint8)
    if out_n.size():
        memcpy(cnp.PyArray_DATA(ns_arr), out_n.data(), out_n.size() * sizeof(int64_t))
        memcpy(cnp.PyArray_DATA(ls_arr), out_l.data(), out_l.size() * sizeof(double))
        memcpy(cnp.PyArray_DATA(err_arr), out_err.data(), out_err.size() * sizeof(double))
        memcpy(cnp.PyArray_DATA(mode_arr), out_mode.data(), out_mode.size() * sizeof(uint8_t))
    return ns_arr, ls_arr, err_arr, mode_arr, bool(ok)


cdef bint measure_checkpoint(int64_t n, vector[int32_t]& deg,
                             vector[int32_t]& eu, vector[int32_t]& ev,
                             int64_t exact_threshold, int64_t n_sources,
                             uint64_t seed, double* length_out,
                             double* err_out, int* sampled_out):
    cdef int64_t n_edges = <int64_t>eu.size()
    cdef vector[int64_t] indptr
    cdef vector[int64_t] cursor
    cdef vector[int32_t] indices
    indptr.assign(n + 1, <int64_t>0)
    cdef int64_t e, i
    for e in range(n_edges):
        indptr[eu[e] + 1] += 1
        indptr[ev[e] + 1] += 1
    for i in range(n):
        indptr[i + 1] += indptr[i]
    cursor.resize(n)
    for i in range(n):
        cursor[i] = indptr[i]
    indices.resize(2 * n_edges)
    cdef int32_t a, b
    for e in range(n_edges):
        a = eu[e]
        b = ev[e]
        indices[cursor[a]] = b
        cursor[a] += 1
        indices[cursor[b]] = a
        cursor[b] += 1

    # source selection mirrors _pure._measure
    cdef vector[int64_t] srcs
    cdef Rng rng
    cdef int64_t si, jj, tmp
    cdef int sampled
    if n <= exact_threshold or n_sources >= n:
        srcs.resize(n)
        for si in range(n):
            srcs[si] = si
        sampled = 0
    else:
        rng.state = seed + <uint64_t>n * GOLDEN
        srcs.resize(n)
        for si in range(n):
            srcs[si] = si
        for si in range(n_sources):
            jj = si + <int64_t>rng_below(&rng, n - si)
            tmp = srcs[si]
            srcs[si] = srcs[jj]
            srcs[jj] = tmp
        srcs.resize(n_sources)
        sort_int64(srcs)
        sampled = 1

    cdef vector[int32_t] dist
    cdef vector[int32_t] queue
    dist.resize(n)
    queue.resize(n)
    cdef vector[double] rowmeans
    rowmeans.resize(srcs.size())
    cdef int64_t rowsum
    for si in range(<int64_t>srcs.size()):
        if not bfs_rowsum(indptr.data(), indices.data(), n, <int32_t>srcs[si],
                          dist.data(), queue.data(), &rowsum):
            return False
        rowmeans[si] = <double>rowsum / <double>(n - 1)
    reduce_mean_sem(rowmeans.data(), <int64_t>rowmeans.size(), sampled == 1,
                    length_out, err_out)
    sampled_out[0] = sampled
    return True


cdef void sort_int64(vector[int64_t]& v) nogil:
    # insertion sort is fine: source lists are <= a few thousand entries
    cdef int64_t i, j, key
    for i in range(1, <int64_t>v.size()):
        key = v[i]
        j = i - 1
        while j >= 0 and v[j] > key:
            v[j + 1] = v[j]
            j -= 1
        v[j + 1] = key
