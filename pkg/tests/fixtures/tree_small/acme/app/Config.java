package acme.app;

/** Launch settings with compiled-in defaults. */
public final class Config {
    private final int budget;

    private Config(int budget) {
        this.budget = budget;
    }

    public static Config defaults() {
        return new Config(1000);
    }
}
