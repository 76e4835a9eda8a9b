#include <cstdio>
int main(){ std::puts("laminadesk: not wired yet"); return 0; }
