// Placeholder until the scenario runner lands.
int main() { return 0; }
